#pragma once

// Geometry behind the reduction: each edge (a,b) of a graph gets a copy of the
// homogeneous space
//
//     B = U(k)^{k+2} / (U(k−1) × U(k)^{k+1}),      dim B = 2k−1,
//
// where U(k−1) sits diagonally in every numerator factor and the f-th copy of
// U(k) (f = 2..k+2) sits in numerator factors 1 and f. A rank-r torus acts
// from the left: on the sphere of edge (a,b), numerator factor f = i+2 receives
// the weights (t_a, …, t_a, t_b, …, t_b) with i copies of t_a; factor 1
// receives nothing.
//
// The Sullivan model of the Borel construction has generators
//   t_1..t_r (degree 2), Chern classes of each denominator block (2, 4, …),
//   and v_{f,i} (degree 2i−1) for each numerator factor f,
// with d v_{f,i} = c_i(denominator side of f) − c_i(torus side of f).
//
// Factor indices f are 1-based throughout, matching the generator names.

#include "afree/algebra.hpp"
#include "afree/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace afree {

/// A copy of U(rank) in the denominator, included in the standard way into
/// each listed numerator factor.
struct DenominatorBlock {
    std::string label;
    int rank = 0;
    std::vector<int> factors;  // 1-based numerator factors
};

struct HomogeneousSpaceData {
    int k = 0;
    int numerator_count = 0;  // copies of U(k)
    std::vector<DenominatorBlock> denominator;

    /// Σ dim U(k) over the numerator − Σ dim U(rank) over the denominator.
    int dimension() const;
};

/// Block layout for any k ≥ 1 (no further validation).
HomogeneousSpaceData edge_sphere_layout(int k);
/// Throws PreconditionError for k < 2.
HomogeneousSpaceData build_edge_sphere(int k);

/// k rows (torus coordinates of one U(k) factor) × r columns (acting torus).
using WeightMatrix = std::vector<std::vector<int>>;

struct EdgeSphereAction {
    Edge edge;
    /// blocks[i] acts on numerator factor i+2, for i = 0..k.
    std::vector<WeightMatrix> blocks;

    friend bool operator==(const EdgeSphereAction&, const EdgeSphereAction&) = default;
};

struct TorusActionData {
    int k = 0;
    int r = 0;
    std::vector<EdgeSphereAction> spheres;

    friend bool operator==(const TorusActionData&, const TorusActionData&) = default;
};

/// The k+1 weight matrices of S¹_a × S¹_b → (T^k)_i, i = 0..k: rows 1..i
/// select t_a, rows i+1..k select t_b. Throws PreconditionError if a == b,
/// k < 2, or a vertex is outside 0..r−1.
std::vector<WeightMatrix> build_torus_inclusion(const Edge& e, int k, int r);

/// The weights on numerator factor 1: always zero.
WeightMatrix first_factor_weights(int k, int r);

TorusActionData assemble_action(const Graph& G, int k);

/// "action k=<k> r=<r>", then per edge "sphere <a> <b>" followed by
/// "block <i>" and k rows of r integers each.
std::string write_action(const TorusActionData& action);
/// Throws ParseError with the line number.
TorusActionData parse_action(std::string_view text);

/// Exact-rational combination of degree-2 root symbols.
using LinearForm = std::map<std::size_t, Rational>;

/// General model builder for quotients of products of unitary groups.
///
/// Root symbols are grouped into blocks; a block of size n stands for the
/// maximal torus of a U(n) and contributes Chern classes c_1..c_n (degrees
/// 2..2n). Blocks declared as `plain` contribute their single symbol directly
/// as a degree-2 generator (used for the acting torus).
///
/// Each numerator factor U(n) receives two lists of n linear forms: the
/// denominator-side roots and the torus-side roots. Its odd generators
/// v_1..v_n get d v_i = e_i(denominator side) − e_i(torus side), where each
/// elementary symmetric polynomial is averaged over the Weyl groups of the
/// blocks and rewritten in Chern classes.
class BiquotientModelBuilder {
public:
    /// Returns the index of the block's first symbol.
    std::size_t add_block(std::string name_prefix, int size);
    std::size_t add_plain(std::string name);
    void add_factor(std::string name_prefix, std::vector<LinearForm> denominator_roots,
                    std::vector<LinearForm> torus_roots);

    SullivanAlgebra build() const;

private:
    struct Block {
        std::string prefix;
        std::size_t first;
        int size;
        bool plain;
    };
    struct NumeratorFactor {
        std::string prefix;
        std::vector<LinearForm> h_roots;
        std::vector<LinearForm> t_roots;
    };
    std::size_t symbols_ = 0;
    std::vector<Block> blocks_;
    std::vector<NumeratorFactor> factors_;
};

/// Borel-construction model of the torus action on the product of edge spheres.
SullivanAlgebra borel_model(const TorusActionData& action);
/// Model of a single edge sphere with the trivial torus (rank 0).
SullivanAlgebra borel_model(const HomogeneousSpaceData& space);

/// Generator names used by the models.
std::string torus_generator_name(int j);  // 0-based j → "t<j+1>"
std::string volume_generator_name(const std::optional<Edge>& sphere, int factor, int k);

struct KernelCheckReport {
    bool ok = false;
    int k = 0;
    std::size_t kernel_dimension = 0;
    /// Kernel basis vector on (vol_1, …, vol_{k+2}), normalised to vol_1 = 1.
    std::vector<Rational> kernel_vector;
    std::vector<std::string> lines;
};

/// On the homogeneous-space model, takes the linear part of d (the projection
/// onto single generators) on the top odd generators vol_f = v_{f,k} and
/// checks: vol_1 ↦ Σ_f c_k(U(k)_f), vol_f ↦ c_k(U(k)_f) for f ≥ 2, and the
/// kernel is spanned by vol_1 − vol_2 − … − vol_{k+2}.
KernelCheckReport claim1_kernel_check(int k);

struct VolumeCheckReport {
    Edge edge{};
    bool ok = false;
    /// +1 if the pure-torus part equals −Σ t_a^{k−l} t_b^l, −1 if it equals
    /// +Σ t_a^{k−l} t_b^l, 0 otherwise.
    int sign = 0;
    std::string found;
    std::string expected;
};

/// In the model of `action`, the part of d(vol_1 − vol_2 − … − vol_{k+2}) on the
/// sphere of `edge` that involves only torus generators.
VolumeCheckReport verify_volume_differential(const SullivanAlgebra& model, const TorusActionData& action,
                                             const Edge& edge);
VolumeCheckReport verify_volume_differential(const Graph& G, int k, const Edge& edge);

struct BorelCheckReport {
    bool ok = false;
    ValidationReport well_formed;
    KernelCheckReport kernel;
    std::vector<VolumeCheckReport> volumes;
    /// The common sign of all volume checks, 0 if they disagree.
    int global_sign = 0;
    std::vector<std::string> lines;
};

/// Every check behind the construction for G: dimension of the edge sphere,
/// well-formedness of the Borel model, the kernel check, and the volume check
/// on every edge with one global sign.
BorelCheckReport check_borel(const Graph& G, int k);

}  // namespace afree
