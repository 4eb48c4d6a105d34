#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssiwasawa/cyclotomic.hpp"
#include "ssiwasawa/matrix.hpp"
#include "ssiwasawa/series.hpp"
#include "ssiwasawa/zpoly.hpp"

namespace ssiw {

/// A finitely presented Z_p-module: `generators` free generators modulo the
/// Z_p-span of the rows of `relations` (exact integers).
struct PresentedModule {
    int p = 0;
    std::size_t generators = 0;
    IntMatrix relations;
    std::string description;
};

struct ModuleStructure {
    std::size_t rank = 0;
    /// Valuations of the nontrivial cyclic factors Z/p^k, ascending.
    std::vector<int> torsion;
    /// ord_p of the torsion order.
    long length = 0;
};

/// SNF over Z_(p) of the relation matrix.
ModuleStructure snf(const PresentedModule& m);

/// Z_p[X]/(f, g_1, ..., g_r) with f monic, presented on the basis 1, X, ...,
/// X^(deg f - 1). With distinguished f this is also Lambda/(f, g_1, ...).
PresentedModule polynomial_quotient(int p, const ZPoly& monic, const std::vector<ZPoly>& others);

/// Direct sum of copies of one module.
PresentedModule direct_power(const PresentedModule& m, int copies);

/// The point group over L_n as a Z_p-module: Lambda/omega_n^e (+) Lambda /
/// omega_(n-1)^(-e), e = (-1)^n, modulo the diagonal copy of the base points.
PresentedModule model_E_Ln(int p, int n);

struct TraceMapReport {
    int n = 0;
    /// Z_p-rank of the kernel of the trace from level n to n - 1.
    long kernel_rank = 0;
    /// Free rank of the cokernel; 0 means the cokernel is a p-group.
    long cokernel_free_rank = 0;
    /// Number of cyclic factors of the cokernel.
    long cokernel_p_rank = 0;
    std::vector<int> cokernel_torsion;
    std::int64_t q = 0;
};

/// Kernel and cokernel of the trace on the explicit presentations, the map
/// sending (d_n, 0) to (0, -d_(n-2)) and (0, d_(n-1)) to (p d_(n-1), 0).
TraceMapReport trace_kernel_cokernel(int p, int n);

struct ShaSize {
    int n = 0;
    int d = 0;
    /// d * sum_{k<=n} q_k.
    long predicted = 0;
    /// Torsion length of the explicit (Z_p[X]/(omega_tilde^+, omega_tilde^-))^d.
    long by_snf = 0;
    /// d * ord_p Res(omega_tilde^+, omega_tilde^-).
    long by_resultant = 0;
    std::string structure;
    [[nodiscard]] bool consistent() const noexcept { return predicted == by_snf && predicted == by_resultant; }
};

/// Size of the p-part of Sha in the most basic case. The hypotheses behind
/// the formula are global facts the caller asserts; nothing here checks them.
ShaSize sha_structure_size(int p, int n, int d);

/// u_ij (d x d) and the characteristic series t_Y of the torsion part.
struct PlusMinusLData {
    std::vector<std::vector<IwasawaSeries>> u;
    IwasawaSeries t_y;
};

struct PlusMinusL {
    IwasawaSeries series;
    MuLambda invariants;
    /// det(u_ij(0)) is a unit, the normalization expected when the base
    /// generators are identified with the standard basis. A false value is
    /// a warning, not an error.
    bool unit_at_zero = false;
};

/// det(u_ij) t_Y with its mu and lambda. A product that vanishes to the
/// working precision throws ZeroToPrecision: the series may be identically
/// zero, which is the unbounded-corank case.
PlusMinusL plus_minus_L(const PlusMinusLData& data);

/// det of a square matrix of series: cofactor expansion up to 4 x 4,
/// Berkowitz beyond.
IwasawaSeries series_determinant(const std::vector<std::vector<IwasawaSeries>>& u);

struct ZetaQuotient {
    int n = 0;
    bool finite = false;
    /// ord_p of the order of the quotient by the columns of u(zeta_n - 1).
    long size = 0;
    /// mu (p^n - p^(n-1)) + lambda of det u, when p^n - p^(n-1) > lambda.
    std::optional<long> predicted;
    [[nodiscard]] bool agrees() const noexcept { return !predicted || (finite && *predicted == size); }
};

/// Evaluates u at zeta_n - 1 and takes the SNF over Z_p[mu_(p^n)].
ZetaQuotient quotient_finiteness_at_zeta(const std::vector<std::vector<IwasawaSeries>>& u, int n);

} // namespace ssiw
