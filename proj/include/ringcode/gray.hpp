#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringcode/rational.hpp"
#include "ringcode/ring.hpp"
#include "ringcode/weights.hpp"

namespace ringcode {

using FieldVector = std::vector<std::uint8_t>;

enum class Verdict { Unverified, True, False };

std::string to_string(Verdict v);

struct GrayFlags {
    Verdict weight_preserving = Verdict::Unverified;
    Verdict isometric = Verdict::Unverified;
    Verdict bijective = Verdict::Unverified;
    /// Name of the weight function the first two flags were checked against.
    std::string weight_function;

    bool operator==(const GrayFlags&) const = default;
};

/// A symbol map R -> F_p^L applied coordinatewise.
class GrayMap {
  public:
    GrayMap(Ring domain, unsigned prime, std::size_t length, std::vector<FieldVector> table, GrayFlags flags = {});

    const Ring& domain() const { return domain_; }
    unsigned prime() const { return prime_; }
    std::size_t length() const { return length_; }
    const std::vector<FieldVector>& table() const { return table_; }
    const FieldVector& image(Element x) const { return table_.at(x); }

    const GrayFlags& flags() const { return flags_; }
    void set_flags(GrayFlags flags) { flags_ = std::move(flags); }

    bool operator==(const GrayMap& other) const {
        return domain_ == other.domain_ && prime_ == other.prime_ && length_ == other.length_ &&
               table_ == other.table_;
    }

  private:
    Ring domain_;
    unsigned prime_;
    std::size_t length_;
    std::vector<FieldVector> table_;
    GrayFlags flags_;
};

/// Nonzero positions and their values for one ring element's image.
struct SymbolImage {
    std::vector<unsigned> support;
    std::vector<unsigned> values;
};

/// 0 -> (0,0), 1 -> (0,1), 2 -> (1,1), 3 -> (1,0).
GrayMap gray_z4();
/// a + ub -> (b, a + b).
GrayMap gray_f2u();
/// a + ub + vc + uvd -> (a+b+c+d, c+d, b+d, d).
GrayMap gray_f2uv();

/// Built-in map by name; only `standard` exists, for Z4, F2U and F2UV.
GrayMap builtin_gray(const Ring& ring, std::string_view name);

/// Builds a map with L = A positions from per-element supports.
///
/// assignment[r] gives, for each nonzero r, exactly w(r) distinct positions
/// and a nonzero F_p value for each; assignment[0] must be empty. The result
/// is marked weight-preserving against wf.
GrayMap build_general_gray(const Ring& ring, const WeightFunction& wf, unsigned prime,
                           const std::vector<SymbolImage>& assignment);

/// Concatenation of the symbol images of v.
FieldVector apply(const GrayMap& gm, const RingVector& v);
FieldVector apply(const GrayMap& gm, std::span<const Element> v);

std::size_t hamming_weight(std::span<const std::uint8_t> v);
std::size_t hamming_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

/// w_H(phi(r)) = w(r) for every r. Updates gm's flags.
bool verify_weight_preserving(GrayMap& gm, const WeightFunction& wf);
/// d_H(phi(x), phi(y)) = w(x - y) for every ordered pair. Updates gm's flags.
bool verify_isometric(GrayMap& gm, const WeightFunction& wf);
/// Images pairwise distinct and M = p^L. Updates gm's flags.
bool verify_bijective(GrayMap& gm);

enum class SearchOutcome { Found, NoneExists, BudgetExceeded };

struct GraySearchResult {
    SearchOutcome outcome = SearchOutcome::NoneExists;
    std::optional<GrayMap> map;
    /// Candidate images tried during backtracking.
    std::uint64_t nodes_visited = 0;
    /// Product over nonzero r of C(L, w(r)) (p-1)^w(r): the unpruned space.
    BigInt search_space;
};

/// Backtracking search for an isometric map R -> F_p^A.
///
/// Elements are assigned in code order; each element's candidates run over
/// supports in lexicographic order, then values in lexicographic order, so
/// the first map found is deterministic.
GraySearchResult find_isometric_gray(const Ring& ring, const WeightFunction& wf, unsigned prime,
                                     std::uint64_t node_budget = 100'000'000);

}  // namespace ringcode
