#include "ssiwasawa/modules.hpp"

#include <algorithm>

#include "ssiwasawa/eisenstein_ring.hpp"
#include "ssiwasawa/error.hpp"

namespace ssiw {

namespace {

/// (-1)^floor(k/2): the sign with which the base point sits in d_k Lambda.
int diagonal_sign(int k) { return (k / 2) % 2 == 0 ? 1 : -1; }

CycloKind omega(bool plus) { return plus ? CycloKind::OmegaPlus : CycloKind::OmegaMinus; }
CycloKind omega_tilde(bool plus) { return plus ? CycloKind::OmegaTildePlus : CycloKind::OmegaTildeMinus; }

/// Coefficients of `poly` as a row segment of the given width.
void put_row(IntMatrix& m, std::size_t row, std::size_t offset, std::size_t width, const ZPoly& poly, long scale = 1) {
    for (int i = 0; i <= poly.degree(); ++i) {
        if (static_cast<std::size_t>(i) >= width) throw Error(ErrorKind::InvalidArgument, "polynomial does not fit its block");
        m(row, offset + static_cast<std::size_t>(i)) = poly[i] * scale;
    }
}

ModuleStructure structure_of(const SnfResult& s) {
    ModuleStructure out;
    out.rank = s.free_rank();
    for (int v : s.pivots) {
        if (v > 0) out.torsion.push_back(v);
    }
    out.length = s.torsion_length();
    return out;
}

} // namespace

ModuleStructure snf(const PresentedModule& m) { return structure_of(snf_local(m.relations, m.p)); }

PresentedModule polynomial_quotient(int p, const ZPoly& monic, const std::vector<ZPoly>& others) {
    if (monic.is_zero() || monic.leading() != 1) throw Error(ErrorKind::InvalidArgument, "first ideal generator must be monic");
    const int deg = monic.degree();
    const auto width = static_cast<std::size_t>(deg);
    IntMatrix rel(others.size() * width, width, mpz_class(0));
    std::size_t row = 0;
    for (const auto& g : others) {
        ZPoly shifted = g.rem_monic(monic);
        for (int j = 0; j < deg; ++j) {
            put_row(rel, row++, 0, width, shifted);
            shifted = (ZPoly::x() * shifted).rem_monic(monic);
        }
    }
    return {p, width, std::move(rel), "Z_p[X]/(" + monic.str() + ", ...)"};
}

PresentedModule direct_power(const PresentedModule& m, int copies) {
    if (copies < 0) throw Error(ErrorKind::InvalidArgument, "negative number of copies");
    const auto k = static_cast<std::size_t>(copies);
    IntMatrix rel(m.relations.rows() * k, m.generators * k, mpz_class(0));
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t r = 0; r < m.relations.rows(); ++r) {
            for (std::size_t j = 0; j < m.generators; ++j) {
                rel(c * m.relations.rows() + r, c * m.generators + j) = m.relations(r, j);
            }
        }
    }
    return {m.p, m.generators * k, std::move(rel), "(" + m.description + ")^" + std::to_string(copies)};
}

PresentedModule model_E_Ln(int p, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "the model needs n >= 1");
    const bool plus = n % 2 == 0;
    const ZPoly top = cyclo_polynomial(p, n, omega(plus));
    const ZPoly below = cyclo_polynomial(p, n - 1, omega(!plus));
    const auto a = static_cast<std::size_t>(top.degree());
    const auto b = static_cast<std::size_t>(below.degree());
    IntMatrix rel(1, a + b, mpz_class(0));
    put_row(rel, 0, 0, a, cyclo_polynomial(p, n, omega_tilde(plus)), diagonal_sign(n));
    put_row(rel, 0, a, b, cyclo_polynomial(p, n - 1, omega_tilde(!plus)), diagonal_sign(n - 1));
    return {p, a + b, std::move(rel), "d_n Lambda_n + d_(n-1) Lambda_(n-1) modulo the base points"};
}

TraceMapReport trace_kernel_cokernel(int p, int n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "the trace ladder needs n >= 2");
    const bool plus = n % 2 == 0;
    const ZPoly an = cyclo_polynomial(p, n, omega(plus));
    const ZPoly an1 = cyclo_polynomial(p, n - 1, omega(!plus));
    const ZPoly an2 = cyclo_polynomial(p, n - 2, omega(plus));
    const auto a = static_cast<std::size_t>(an.degree());
    const auto b = static_cast<std::size_t>(an1.degree());
    const auto c = static_cast<std::size_t>(an2.degree());

    // rows: images of the Z_p-basis of A_n (+) A_(n-1) in A_(n-1) (+) A_(n-2)
    IntMatrix map(a + b, b + c, mpz_class(0));
    ZPoly power = ZPoly::constant(1);
    for (std::size_t i = 0; i < a; ++i) {
        put_row(map, i, b, c, -power.rem_monic(an2));
        power = ZPoly::x() * power;
    }
    for (std::size_t j = 0; j < b; ++j) map(a + j, j) = p;

    const PresentedModule source = model_E_Ln(p, n);
    const PresentedModule target = model_E_Ln(p, n - 1);
    // The ladder must carry the base points to p times the base points.
    for (std::size_t col = 0; col < b + c; ++col) {
        mpz_class acc = 0;
        for (std::size_t r = 0; r < a + b; ++r) acc += source.relations(0, r) * map(r, col);
        if (acc != p * target.relations(0, col)) {
            throw Error(ErrorKind::InvalidArgument, "trace ladder is inconsistent with the diagonal embedding");
        }
    }

    IntMatrix image = map;
    image.append_rows(target.relations);
    const SnfResult s = snf_local(image, p);
    TraceMapReport out;
    out.n = n;
    const long source_rank = static_cast<long>(a + b) - 1;
    const long image_rank = static_cast<long>(s.relation_rank()) - 1;
    out.kernel_rank = source_rank - image_rank;
    out.cokernel_free_rank = static_cast<long>(s.free_rank());
    for (int v : s.pivots) {
        if (v > 0) out.cokernel_torsion.push_back(v);
    }
    out.cokernel_p_rank = static_cast<long>(out.cokernel_torsion.size());
    out.q = q_value(p, n);
    return out;
}

ShaSize sha_structure_size(int p, int n, int d) {
    if (n < 0 || d < 0) throw Error(ErrorKind::InvalidArgument, "n and d must be nonnegative");
    const ZPoly plus = cyclo_polynomial(p, n, CycloKind::OmegaTildePlus);
    const ZPoly minus = cyclo_polynomial(p, n, CycloKind::OmegaTildeMinus);
    ShaSize out;
    out.n = n;
    out.d = d;
    out.predicted = static_cast<long>(d) * q_sum(p, n);
    out.by_snf = snf(direct_power(polynomial_quotient(p, plus, {minus}), d)).length;
    out.by_resultant = static_cast<long>(d) * quotient_order_resultant(plus, minus, p);
    out.structure = "(Lambda/(omega~+_" + std::to_string(n) + ", omega~-_" + std::to_string(n) + "))^" + std::to_string(d);
    return out;
}

namespace {

IwasawaSeries cofactor_determinant(const std::vector<std::vector<IwasawaSeries>>& u) {
    const std::size_t d = u.size();
    if (d == 1) return u[0][0];
    IwasawaSeries acc = IwasawaSeries(u[0][0].context(), u[0][0].degree());
    for (std::size_t col = 0; col < d; ++col) {
        std::vector<std::vector<IwasawaSeries>> minor;
        for (std::size_t r = 1; r < d; ++r) {
            std::vector<IwasawaSeries> row;
            for (std::size_t c = 0; c < d; ++c) {
                if (c != col) row.push_back(u[r][c]);
            }
            minor.push_back(std::move(row));
        }
        const IwasawaSeries term = u[0][col] * cofactor_determinant(minor);
        acc = col % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

IwasawaSeries series_determinant(const std::vector<std::vector<IwasawaSeries>>& u) {
    const std::size_t d = u.size();
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
    for (const auto& row : u) {
        if (row.size() != d) throw Error(ErrorKind::InvalidArgument, "matrix must be square");
    }
    if (d <= 4) return cofactor_determinant(u);
    const PadicContext& ctx = u[0][0].context();
    const int degree = u[0][0].degree();
    const IwasawaSeries zero(ctx, degree);
    Matrix<IwasawaSeries> m(d, d, zero);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) m(r, c) = u[r][c];
    }
    return berkowitz_determinant(m, zero, IwasawaSeries::constant(ctx, degree, PadicScalar::one(ctx)));
}

PlusMinusL plus_minus_L(const PlusMinusLData& data) {
    const IwasawaSeries det = series_determinant(data.u);
    IwasawaSeries series = det * data.t_y;
    MuLambda invariants{};
    try {
        invariants = mu_lambda(series);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::ZeroToPrecision) throw;
        throw Error(ErrorKind::ZeroToPrecision,
                    "L_p vanishes to working precision: it may be identically zero, which happens exactly when the "
                    "Selmer coranks are unbounded");
    }
    const std::size_t d = data.u.size();
    PadicMatrix at_zero(d, d, PadicScalar::zero(det.context()));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) at_zero(r, c) = data.u[r][c][0];
    }
    bool unit = false;
    const PadicScalar det0 = determinant(at_zero);
    if (det0.is_nonzero()) unit = det0.valuation() == 0;
    return {std::move(series), invariants, unit};
}

ZetaQuotient quotient_finiteness_at_zeta(const std::vector<std::vector<IwasawaSeries>>& u, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "zeta_n needs n >= 1");
    const std::size_t d = u.size();
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
    std::vector<RingElement> entries;
    for (const auto& row : u) {
        if (row.size() != d) throw Error(ErrorKind::InvalidArgument, "matrix must be square");
        for (const auto& g : row) entries.push_back(eval_at_zeta(g, n));
    }
    Matrix<RingElement> m(d, d, entries.front().ring()->zero());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i / d, i % d) = entries[i];
    const SnfResult s = snf_dvr(m);

    ZetaQuotient out;
    out.n = n;
    out.finite = s.relation_rank() == d;
    out.size = out.finite ? s.torsion_length() : 0;
    const int p = u[0][0].context().p();
    try {
        const MuLambda ml = mu_lambda(series_determinant(u));
        const std::int64_t e = xi_degree(p, n);
        if (e > ml.lambda) out.predicted = static_cast<long>(ml.mu) * e + ml.lambda;
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::ZeroToPrecision) throw;
    }
    return out;
}

} // namespace ssiw
