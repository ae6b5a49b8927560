#include "jordanc/eja.hpp"

#include "jordanc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace jordanc {

std::string to_string(Family f) {
  switch (f) {
    case Family::R: return "R";
    case Family::C: return "C";
    case Family::Q: return "Q";
    case Family::V: return "V";
  }
  return "?";
}

std::string to_string(Embedding e) {
  switch (e) {
    case Embedding::Standard: return "standard";
    case Embedding::Universal: return "universal";
    case Embedding::Derived: return "derived";
  }
  return "?";
}

// --- EmbeddedJordanAlgebra -------------------------------------------------

EmbeddedJordanAlgebra::EmbeddedJordanAlgebra(HermSubspace basis, Embedding embedding,
                                             std::optional<AntiAutomorphism> involution, std::string label)
    : basis_(std::move(basis)),
      unit_(AlgebraElement::identity(basis_.ambient())),
      embedding_(embedding),
      involution_(std::move(involution)),
      label_(std::move(label)) {
  if (basis_.orthonormality_defect() > 1e-8) throw NumericalError("EJC " + label_ + ": basis is not orthonormal");
  if (!basis_.contains(unit_, 1e-8)) throw ValidationError("EJC " + label_ + ": ambient unit is not in the algebra");
  if (involution_ && !involution_->domain().same_shape(ambient()))
    throw StructuralError("EJC " + label_ + ": involution acts on another algebra");
}

bool EmbeddedJordanAlgebra::contains(const AlgebraElement& x, double tol) const {
  return x.conforms_to(ambient()) && basis_.contains(x, tol);
}

void EmbeddedJordanAlgebra::require_member(const AlgebraElement& x, const char* what, double tol) const {
  if (!x.conforms_to(ambient()))
    throw StructuralError(std::string(what) + ": element does not live in the ambient of " + label_);
  if (!basis_.contains(x, tol)) {
    std::ostringstream os;
    os << what << ": element is not in " << label_ << " (residual " << basis_.residual(x) << ")";
    throw MembershipError(os.str());
  }
}

RVector EmbeddedJordanAlgebra::coordinates(const AlgebraElement& x) const {
  return basis_.coords().transpose() * herm_coords(x);
}

AlgebraElement EmbeddedJordanAlgebra::from_coordinates(const Eigen::Ref<const RVector>& c) const {
  if (c.size() != dim()) throw StructuralError("from_coordinates: wrong coordinate count");
  return from_herm_coords(ambient(), basis_.coords() * c);
}

AlgebraElement EmbeddedJordanAlgebra::random_element(Rng& rng) const {
  RVector c(dim());
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = standard_normal(rng);
  return from_coordinates(c);
}

// --- constructors ----------------------------------------------------------

namespace {

std::string label_for(Family f, int n, Embedding e) {
  std::string s = to_string(f) + std::to_string(n);
  const bool default_univ = f == Family::V;
  if (e == Embedding::Universal && !default_univ) s += "@univ";
  if (e == Embedding::Standard && default_univ) s += "@std";
  return s;
}

Ejc with_label(const Ejc& a, std::string label, Embedding e) {
  return Ejc(a.basis(), e, a.involution(), std::move(label));
}

/// R (x) 1 inside C, the trivial algebra with its transpose involution.
Ejc scalar_algebra(std::string label, Embedding e) {
  StarAlgebra c;
  return Ejc(HermSubspace(c, RMatrix::Identity(1, 1)), e, AntiAutomorphism::transpose(c), std::move(label));
}

Ejc make_real(int n, Embedding e) {
  const StarAlgebra m = StarAlgebra::full_matrix(n);
  // Real symmetric matrices are the diagonal and symmetric-real coordinates.
  std::vector<int> idx;
  int k = 0;
  for (int r = 0; r < n; ++r) {
    idx.push_back(k++);
    for (int c = r + 1; c < n; ++c) {
      idx.push_back(k);
      k += 2;
    }
  }
  RMatrix basis = RMatrix::Zero(m.dim(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) basis(idx[j], static_cast<Eigen::Index>(j)) = 1.0;
  return Ejc(HermSubspace(m, std::move(basis)), e, AntiAutomorphism::transpose(m), label_for(Family::R, n, e));
}

Ejc make_complex(int n, Embedding e) {
  if (e != Embedding::Universal) {
    const StarAlgebra m = StarAlgebra::full_matrix(n);
    return Ejc(HermSubspace(m, RMatrix::Identity(m.dim(), m.dim())), Embedding::Standard, std::nullopt,
               label_for(Family::C, n, Embedding::Standard));
  }
  if (n == 1) return scalar_algebra(label_for(Family::C, 1, e), e);
  const StarAlgebra m = StarAlgebra::full_matrix(n);
  const StarAlgebra mm({n, n});
  std::vector<AlgebraElement> elems;
  for (int k = 0; k < m.dim(); ++k) {
    const AlgebraElement h = herm_basis_element(m, k);
    elems.push_back(direct_sum(h, h.transpose()));
  }
  AntiAutomorphism phi(mm, {1, 0}, {CMatrix::Identity(n, n), CMatrix::Identity(n, n)});
  return Ejc(orthonormalize(mm, elems), Embedding::Universal, std::move(phi), label_for(Family::C, n, e));
}

CMatrix symplectic_form(int n) {
  CMatrix j = CMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = CMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = -CMatrix::Identity(n, n);
  return j;
}

Ejc make_spin_universal(int n, std::string label) {
  SpinSystem spin = spin_system(n);
  std::vector<AlgebraElement> span{AlgebraElement::identity(spin.ambient)};
  span.insert(span.end(), spin.generators.begin(), spin.generators.end());
  AntiAutomorphism phi = solve_antiautomorphism(spin.generators, spin.ambient);
  return Ejc(orthonormalize(spin.ambient, span), Embedding::Universal, std::move(phi), std::move(label));
}

Ejc make_quaternionic(int n, Embedding e) {
  if (e == Embedding::Universal && n == 1) return scalar_algebra(label_for(Family::Q, 1, e), e);
  if (e == Embedding::Universal && n == 2) return make_spin_universal(5, label_for(Family::Q, 2, e));
  const StarAlgebra m = StarAlgebra::full_matrix(2 * n);
  const CMatrix j = symplectic_form(n);
  std::vector<AlgebraElement> elems;
  for (int k = 0; k < m.dim(); ++k) {
    const AlgebraElement h = herm_basis_element(m, k);
    elems.emplace_back(std::vector<CMatrix>{0.5 * (h.block(0) + j * h.block(0).conjugate() * j.adjoint())});
  }
  AntiAutomorphism phi(m, {0}, {j});
  return Ejc(orthonormalize(m, elems), e, std::move(phi), label_for(Family::Q, n, e));
}

Ejc make_spin(int n, Embedding e) {
  if (n < 2) throw ValidationError("spin factor V_n needs n >= 2");
  if (e == Embedding::Universal) return make_spin_universal(n, label_for(Family::V, n, e));
  switch (n) {
    case 2: return with_label(make_real(2, Embedding::Standard), label_for(Family::V, 2, e), Embedding::Standard);
    case 3: return with_label(make_complex(2, Embedding::Standard), label_for(Family::V, 3, e), Embedding::Standard);
    case 5:
      return with_label(make_quaternionic(2, Embedding::Standard), label_for(Family::V, 5, e), Embedding::Standard);
    default:
      throw ValidationError("V" + std::to_string(n) + " has no standard embedding; use @univ");
  }
}

}  // namespace

Ejc make_algebra(Family family, int n, Embedding embedding) {
  if (n < 1) throw ValidationError("make_algebra: n must be at least 1");
  if (embedding == Embedding::Derived) throw ValidationError("make_algebra: choose standard or universal");
  switch (family) {
    case Family::R: return make_real(n, embedding);
    case Family::C: return make_complex(n, embedding);
    case Family::Q: return make_quaternionic(n, embedding);
    case Family::V: return make_spin(n, embedding);
  }
  throw ValidationError("make_algebra: unknown family");
}

void reject_exceptional() {
  throw NotSpecialError(
      "the exceptional (Albert) Jordan algebra is not special: it has no embedding in a complex *-algebra and "
      "admits no composite with any simple Jordan algebra");
}

Ejc unit_object() { return scalar_algebra("I", Embedding::Universal); }

Ejc direct_sum(const Ejc& a, const Ejc& b) {
  const StarAlgebra amb = direct_sum(a.ambient(), b.ambient());
  RMatrix basis = RMatrix::Zero(amb.dim(), a.dim() + b.dim());
  basis.topLeftCorner(a.ambient().dim(), a.dim()) = a.basis().coords();
  basis.bottomRightCorner(b.ambient().dim(), b.dim()) = b.basis().coords();
  std::optional<AntiAutomorphism> phi;
  if (a.involution() && b.involution()) phi = direct_sum(*a.involution(), *b.involution());
  const Embedding e = a.embedding() == b.embedding() ? a.embedding() : Embedding::Derived;
  return Ejc(HermSubspace(amb, std::move(basis)), e, std::move(phi), a.label() + "+" + b.label());
}

AlgebraElement jordan_product(const Ejc& algebra, const AlgebraElement& a, const AlgebraElement& b) {
  algebra.require_member(a, "jordan_product");
  algebra.require_member(b, "jordan_product");
  return jordan(a, b);
}

// --- spectral theory -------------------------------------------------------

AlgebraElement SpectralDecomposition::reconstruct() const {
  if (frame.empty()) throw PreconditionError("SpectralDecomposition: empty frame");
  AlgebraElement out = AlgebraElement::zero(StarAlgebra(std::vector<int>([&] {
    std::vector<int> b;
    for (const auto& m : frame.front().blocks()) b.push_back(static_cast<int>(m.rows()));
    return b;
  }())));
  for (std::size_t i = 0; i < frame.size(); ++i) out += eigenvalues[i] * frame[i];
  return out;
}

namespace {

constexpr int kMaxDraws = 10;

/// Splits the A-idempotent q into primitive idempotents of A.
std::vector<AlgebraElement> split_primitive(const Ejc& algebra, const AlgebraElement& q, Rng& rng) {
  const AlgebraElement& u = algebra.unit();
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    const AlgebraElement r = algebra.random_element(rng);
    const AlgebraElement g = algebra.basis().project(q * r * q);
    const double shift = 2.0 * g.norm() + 1.0;
    const HermEig eig = herm_eig(g + shift * (u - q));
    std::vector<double> vals;
    std::vector<AlgebraElement> parts;
    for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
      if (std::abs(eig.eigenvalues[i] - shift) < 1e-6 * shift) continue;
      vals.push_back(eig.eigenvalues[i]);
      parts.push_back(algebra.basis().project(eig.projectors[i]));
    }
    bool degenerate = false;
    const double scale = std::max(1.0, g.norm());
    for (std::size_t i = 1; i < vals.size(); ++i)
      if (std::abs(vals[i - 1] - vals[i]) < 1e-6 * scale) degenerate = true;
    if (!degenerate) return parts;
  }
  throw NumericalError("spectral: could not draw a non-degenerate element of a Peirce corner");
}

}  // namespace

SpectralDecomposition spectral(const Ejc& algebra, const AlgebraElement& a, std::uint64_t seed) {
  algebra.require_member(a, "spectral");
  Rng rng(seed);
  const HermEig eig = herm_eig(a);
  SpectralDecomposition out;
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    const AlgebraElement q = algebra.basis().project(eig.projectors[i]);
    for (auto& p : split_primitive(algebra, q, rng)) {
      out.eigenvalues.push_back(eig.eigenvalues[i]);
      out.frame.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<AlgebraElement> random_jordan_frame(const Ejc& algebra, std::uint64_t seed) {
  Rng rng(seed);
  const AlgebraElement a = algebra.random_element(rng);
  return spectral(algebra, a, seed ^ 0x9e3779b97f4a7c15ULL).frame;
}

int rank(const Ejc& algebra, std::uint64_t seed) { return static_cast<int>(random_jordan_frame(algebra, seed).size()); }

bool in_cone(const Ejc& algebra, const AlgebraElement& a, double tol) {
  algebra.require_member(a, "in_cone");
  // Jordan spectra agree with ambient spectra since powers are computed alike.
  return min_eigenvalue(a) >= -tol * std::max(1.0, a.norm());
}

bool is_effect(const Ejc& algebra, const AlgebraElement& a, double tol) {
  return in_cone(algebra, a, tol) && in_cone(algebra, algebra.unit() - a, tol);
}

bool is_state_density(const Ejc& algebra, const AlgebraElement& a, double tol) {
  return in_cone(algebra, a, tol) && std::abs(real_inner(a, algebra.unit()) - 1.0) <= tol;
}

RMatrix quad_rep(const Ejc& algebra, const AlgebraElement& a) {
  algebra.require_member(a, "quad_rep");
  const AlgebraElement a2 = jordan(a, a);
  RMatrix m(algebra.dim(), algebra.dim());
  for (int j = 0; j < algebra.dim(); ++j) {
    const AlgebraElement b = algebra.basis().element(j);
    const AlgebraElement ub = 2.0 * jordan(a, jordan(a, b)) - jordan(a2, b);
    m.col(j) = algebra.coordinates(ub);
  }
  return m;
}

// --- center and classification ---------------------------------------------

std::string SummandClass::name() const {
  if (family == "unclassified") {
    std::ostringstream os;
    os << "unclassified(dim=" << dim << ",rank=" << rank << ")";
    return os.str();
  }
  return family + std::to_string(n);
}

SummandClass classify_invariants(int dim, int rank) {
  SummandClass c{"unclassified", 0, dim, rank};
  if (rank == 1 && dim == 1) {
    c.family = "R";
    c.n = 1;
  } else if (rank == 2 && dim >= 3) {
    c.family = "V";
    c.n = dim - 1;
  } else if (rank >= 3) {
    const int r = rank;
    if (dim == r * (r + 1) / 2) {
      c.family = "R";
      c.n = r;
    } else if (dim == r * r) {
      c.family = "C";
      c.n = r;
    } else if (dim == r * (2 * r - 1)) {
      c.family = "Q";
      c.n = r;
    }
  }
  return c;
}

namespace {

int find_root(std::vector<int>& parent, int i) {
  while (parent[static_cast<std::size_t>(i)] != i) {
    parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
    i = parent[static_cast<std::size_t>(i)];
  }
  return i;
}

int first_support_block(const AlgebraElement& c) {
  for (int b = 0; b < c.num_blocks(); ++b)
    if (c.block(b).norm() > 0.5) return b;
  return c.num_blocks();
}

/// Compresses the algebra c A c onto the range of the central idempotent c.
Ejc compress_summand(const Ejc& algebra, const AlgebraElement& c, const std::string& label) {
  std::vector<int> support;
  std::vector<CMatrix> isometries;
  std::vector<int> sizes;
  for (int b = 0; b < c.num_blocks(); ++b) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (c.block(b) + c.block(b).adjoint()));
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()[i] > 0.5) cols.push_back(i);
    if (cols.empty()) continue;
    CMatrix v(c.block(b).rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) v.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(cols[k]);
    support.push_back(b);
    sizes.push_back(static_cast<int>(cols.size()));
    isometries.push_back(std::move(v));
  }
  const StarAlgebra amb(sizes);
  std::vector<AlgebraElement> elems;
  elems.reserve(static_cast<std::size_t>(algebra.dim()));
  for (int j = 0; j < algebra.dim(); ++j) {
    const AlgebraElement x = algebra.basis().element(j);
    std::vector<CMatrix> blocks;
    for (std::size_t k = 0; k < support.size(); ++k) {
      const CMatrix& v = isometries[k];
      blocks.push_back(v.adjoint() * x.block(support[k]) * v);
    }
    elems.emplace_back(std::move(blocks));
  }
  return Ejc(orthonormalize(amb, elems), Embedding::Derived, std::nullopt, label);
}

}  // namespace

CenterDecomposition center_and_summands(const Ejc& algebra, std::uint64_t seed) {
  const std::vector<AlgebraElement> frame = random_jordan_frame(algebra, seed);
  Rng rng(seed + 1);
  const AlgebraElement r = algebra.random_element(rng);
  const double scale = r.norm();
  const int n = static_cast<int>(frame.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  // Frame members share a simple summand iff their Peirce space p_i A p_j
  // is nonzero; a random element of A detects that with probability one.
  for (int i = 0; i < n; ++i) {
    const AlgebraElement pr = frame[static_cast<std::size_t>(i)] * r;
    for (int j = i + 1; j < n; ++j) {
      if ((pr * frame[static_cast<std::size_t>(j)]).norm() > 1e-6 * scale)
        parent[static_cast<std::size_t>(find_root(parent, j))] = find_root(parent, i);
    }
  }
  std::vector<int> roots;
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    const int root = find_root(parent, i);
    auto it = std::find(roots.begin(), roots.end(), root);
    if (it == roots.end()) {
      roots.push_back(root);
      members.push_back({i});
    } else {
      members[static_cast<std::size_t>(it - roots.begin())].push_back(i);
    }
  }
  struct Component {
    AlgebraElement idempotent;
    int size;
    int first_block;
    double first_trace;
  };
  std::vector<Component> comps;
  for (const auto& m : members) {
    AlgebraElement c = frame[static_cast<std::size_t>(m.front())];
    for (std::size_t k = 1; k < m.size(); ++k) c += frame[static_cast<std::size_t>(m[k])];
    c = algebra.basis().project(c);
    const int fb = first_support_block(c);
    const double tr = fb < c.num_blocks() ? c.block(fb).trace().real() : 0.0;
    comps.push_back({std::move(c), static_cast<int>(m.size()), fb, tr});
  }
  // Deterministic order: by first supporting block, then by the leading
  // diagonal mass of the idempotent there.
  std::stable_sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    if (a.first_block != b.first_block) return a.first_block < b.first_block;
    const auto& ba = a.idempotent.block(a.first_block);
    const auto& bb = b.idempotent.block(b.first_block);
    for (Eigen::Index i = 0; i < ba.rows(); ++i) {
      const double da = ba(i, i).real();
      const double db = bb(i, i).real();
      if (std::abs(da - db) > 1e-6) return da > db;
    }
    return false;
  });

  CenterDecomposition out;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    out.central_idempotents.push_back(comps[k].idempotent);
    out.summand_ranks.push_back(comps[k].size);
    out.summands.push_back(
        compress_summand(algebra, comps[k].idempotent, algebra.label() + "[" + std::to_string(k) + "]"));
  }
  out.center = orthonormalize(algebra.ambient(), out.central_idempotents);
  return out;
}

std::vector<SummandClass> classify(const Ejc& algebra, std::uint64_t seed) {
  const CenterDecomposition cd = center_and_summands(algebra, seed);
  std::vector<SummandClass> out;
  for (std::size_t k = 0; k < cd.summands.size(); ++k)
    out.push_back(classify_invariants(cd.summands[k].dim(), cd.summand_ranks[k]));
  return out;
}

std::string classification_string(const std::vector<SummandClass>& classes) {
  std::string s;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) s += " + ";
    s += classes[i].name();
  }
  return s;
}

int reversibility_gap(const Ejc& algebra) {
  if (!algebra.involution())
    throw PreconditionError("reversibility_gap: " + algebra.label() + " carries no canonical involution");
  return fixed_hermitian_subspace(*algebra.involution()).dim() - algebra.dim();
}

// --- audits ----------------------------------------------------------------

AlgebraAudit audit_algebra(const Ejc& algebra, int samples, std::uint64_t seed) {
  AlgebraAudit audit;
  Rng rng(seed);
  audit.unit_residual = algebra.basis().residual(algebra.unit());
  const int d = algebra.dim();
  const auto basis = algebra.basis().elements();
  if (d <= 40) {
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j)
        audit.closure_residual = std::max(
            audit.closure_residual, algebra.basis().residual(jordan(basis[static_cast<std::size_t>(i)],
                                                                    basis[static_cast<std::size_t>(j)])));
  } else {
    std::uniform_int_distribution<int> pick(0, d - 1);
    for (int s = 0; s < samples; ++s) {
      const auto& x = basis[static_cast<std::size_t>(pick(rng))];
      const auto& y = basis[static_cast<std::size_t>(pick(rng))];
      audit.closure_residual = std::max(audit.closure_residual, algebra.basis().residual(jordan(x, y)));
    }
  }
  auto unit_draw = [&] {
    AlgebraElement x = algebra.random_element(rng);
    return (1.0 / x.norm()) * x;
  };
  for (int s = 0; s < samples; ++s) {
    const AlgebraElement a = unit_draw();
    const AlgebraElement b = unit_draw();
    const AlgebraElement c = unit_draw();
    const AlgebraElement a2 = jordan(a, a);
    audit.jordan_identity_residual =
        std::max(audit.jordan_identity_residual, (jordan(a2, jordan(a, b)) - jordan(a, jordan(a2, b))).norm());
    audit.form_associativity_residual = std::max(
        audit.form_associativity_residual, std::abs(real_inner(jordan(a, b), c) - real_inner(b, jordan(a, c))));
  }
  return audit;
}

// --- mini-language ---------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Ejc parse_term(const std::string& term) {
  if (term.empty()) throw ValidationError("algebra spec: empty term");
  std::string body = term;
  std::optional<Embedding> embedding;
  if (const auto at = term.find('@'); at != std::string::npos) {
    const std::string suffix = term.substr(at + 1);
    body = term.substr(0, at);
    if (suffix == "std")
      embedding = Embedding::Standard;
    else if (suffix == "univ")
      embedding = Embedding::Universal;
    else
      throw ValidationError("algebra spec: unknown embedding suffix '@" + suffix + "'");
  }
  if (body == "I") return unit_object();
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(body.empty() ? '?' : body[0])));
  if (letter == 'O' || body == "Albert" || body == "E") reject_exceptional();
  int n = 0;
  const char* first = body.data() + 1;
  const char* last = body.data() + body.size();
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (body.size() < 2 || ec != std::errc() || ptr != last)
    throw ValidationError("algebra spec: cannot parse term '" + term + "'");
  switch (letter) {
    case 'R': return make_algebra(Family::R, n, embedding.value_or(Embedding::Standard));
    case 'C': return make_algebra(Family::C, n, embedding.value_or(Embedding::Standard));
    case 'Q': return make_algebra(Family::Q, n, embedding.value_or(Embedding::Standard));
    case 'V': return make_algebra(Family::V, n, embedding.value_or(Embedding::Universal));
    default: throw ValidationError("algebra spec: unknown family in '" + term + "'");
  }
}

}  // namespace

Ejc parse_algebra(std::string_view spec) {
  std::vector<std::string> terms;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = spec.find('+', start);
    terms.push_back(trim(spec.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start)));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  Ejc out = parse_term(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) out = direct_sum(out, parse_term(terms[i]));
  return out;
}

}  // namespace jordanc
