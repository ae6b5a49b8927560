#include "jordanc/algebra_kernel.hpp"

#include "jordanc/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace jordanc {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kInvSqrt2 = 0.70710678118654752440;

std::atomic<double> g_default_tol{kDependencyTol};

void check_blocks(const std::vector<int>& blocks) {
  if (blocks.empty()) throw ValidationError("StarAlgebra: block list is empty");
  for (int d : blocks) {
    if (d <= 0) throw ValidationError("StarAlgebra: block sizes must be positive");
  }
}

}  // namespace

double default_tolerance() { return g_default_tol.load(std::memory_order_relaxed); }

void set_default_tolerance(double tol) {
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  g_default_tol.store(tol, std::memory_order_relaxed);
}

// --- StarAlgebra -----------------------------------------------------------

std::string default_label(std::span<const int> blocks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << '+';
    os << 'M' << blocks[i];
  }
  return os.str();
}

StarAlgebra::StarAlgebra() : StarAlgebra(std::vector<int>{1}) {}

StarAlgebra::StarAlgebra(std::vector<int> blocks, std::string label)
    : blocks_(std::move(blocks)), label_(std::move(label)) {
  check_blocks(blocks_);
  offsets_.reserve(blocks_.size());
  for (int d : blocks_) {
    offsets_.push_back(dim_);
    dim_ += d * d;
  }
  if (label_.empty()) label_ = default_label(blocks_);
}

StarAlgebra StarAlgebra::full_matrix(int n) { return StarAlgebra(std::vector<int>{n}); }

StarAlgebra tensor(const StarAlgebra& a, const StarAlgebra& b) {
  std::vector<int> blocks;
  blocks.reserve(a.blocks().size() * b.blocks().size());
  for (int d : a.blocks())
    for (int e : b.blocks()) blocks.push_back(d * e);
  return StarAlgebra(std::move(blocks), "(" + a.label() + ")(x)(" + b.label() + ")");
}

StarAlgebra conjugate(const StarAlgebra& a) {
  const std::string& l = a.label();
  std::string label;
  if (l.rfind("conj(", 0) == 0 && l.back() == ')')
    label = l.substr(5, l.size() - 6);
  else
    label = "conj(" + l + ")";
  return StarAlgebra(std::vector<int>(a.blocks().begin(), a.blocks().end()), label);
}

StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b) {
  std::vector<int> blocks(a.blocks().begin(), a.blocks().end());
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return StarAlgebra(std::move(blocks), a.label() + "+" + b.label());
}

// --- AlgebraElement --------------------------------------------------------

AlgebraElement::AlgebraElement(std::vector<CMatrix> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.rows() != b.cols() || b.rows() == 0)
      throw StructuralError("AlgebraElement: blocks must be nonempty square matrices");
  }
}

AlgebraElement AlgebraElement::zero(const StarAlgebra& algebra) {
  std::vector<CMatrix> blocks;
  for (int d : algebra.blocks()) blocks.push_back(CMatrix::Zero(d, d));
  return AlgebraElement(std::move(blocks));
}

AlgebraElement AlgebraElement::identity(const StarAlgebra& algebra) {
  std::vector<CMatrix> blocks;
  for (int d : algebra.blocks()) blocks.push_back(CMatrix::Identity(d, d));
  return AlgebraElement(std::move(blocks));
}

bool AlgebraElement::conforms_to(const StarAlgebra& algebra) const {
  if (num_blocks() != algebra.num_blocks()) return false;
  for (int b = 0; b < num_blocks(); ++b)
    if (block(b).rows() != algebra.block_size(b)) return false;
  return true;
}

bool AlgebraElement::same_shape(const AlgebraElement& other) const {
  if (num_blocks() != other.num_blocks()) return false;
  for (int b = 0; b < num_blocks(); ++b)
    if (block(b).rows() != other.block(b).rows()) return false;
  return true;
}

void require_same_shape(const AlgebraElement& x, const AlgebraElement& y, const char* what) {
  if (!x.same_shape(y)) throw StructuralError(std::string(what) + ": operands have different parent algebras");
}

AlgebraElement AlgebraElement::adjoint() const {
  std::vector<CMatrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.adjoint());
  return AlgebraElement(std::move(out));
}

AlgebraElement AlgebraElement::conjugate() const {
  std::vector<CMatrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.conjugate());
  return AlgebraElement(std::move(out));
}

AlgebraElement AlgebraElement::transpose() const {
  std::vector<CMatrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.transpose());
  return AlgebraElement(std::move(out));
}

bool AlgebraElement::is_hermitian(double tol) const {
  double diff2 = 0.0;
  double norm2 = 0.0;
  for (const auto& b : blocks_) {
    diff2 += (b - b.adjoint()).squaredNorm();
    norm2 += b.squaredNorm();
  }
  return std::sqrt(diff2) <= tol * std::max(1.0, std::sqrt(norm2));
}

double AlgebraElement::norm() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += b.squaredNorm();
  return std::sqrt(s);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_shape(*this, other, "operator+");
  for (int b = 0; b < num_blocks(); ++b) block(b) += other.block(b);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_shape(*this, other, "operator-");
  for (int b = 0; b < num_blocks(); ++b) block(b) -= other.block(b);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "operator*");
  std::vector<CMatrix> out;
  out.reserve(a.blocks_.size());
  for (int i = 0; i < a.num_blocks(); ++i) out.push_back(a.block(i) * b.block(i));
  return AlgebraElement(std::move(out));
}

Complex trace_inner(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_shape(x, y, "trace_inner");
  Complex s = 0.0;
  // Tr(x y*) = sum_{rc} x_rc conj(y_rc)
  for (int b = 0; b < x.num_blocks(); ++b) s += (x.block(b).array() * y.block(b).array().conjugate()).sum();
  return s;
}

double real_inner(const AlgebraElement& x, const AlgebraElement& y) { return trace_inner(x, y).real(); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

AlgebraElement jordan(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_shape(x, y, "jordan");
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(x.num_blocks()));
  for (int b = 0; b < x.num_blocks(); ++b) {
    CMatrix p = x.block(b) * y.block(b);
    p.noalias() += y.block(b) * x.block(b);
    out.push_back(0.5 * p);
  }
  return AlgebraElement(std::move(out));
}

AlgebraElement tensor(const AlgebraElement& x, const AlgebraElement& y) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(x.num_blocks() * y.num_blocks()));
  for (const auto& a : x.blocks())
    for (const auto& b : y.blocks()) out.push_back(kron(a, b));
  return AlgebraElement(std::move(out));
}

AlgebraElement direct_sum(const AlgebraElement& x, const AlgebraElement& y) {
  std::vector<CMatrix> out = x.blocks();
  out.insert(out.end(), y.blocks().begin(), y.blocks().end());
  return AlgebraElement(std::move(out));
}

// --- coordinates -----------------------------------------------------------

RVector herm_coords(const AlgebraElement& x) {
  Eigen::Index n = 0;
  for (const auto& b : x.blocks()) n += b.rows() * b.rows();
  RVector v(n);
  Eigen::Index k = 0;
  for (const auto& m : x.blocks()) {
    const Eigen::Index d = m.rows();
    for (Eigen::Index r = 0; r < d; ++r) {
      v[k++] = m(r, r).real();
      for (Eigen::Index c = r + 1; c < d; ++c) {
        const Complex z = 0.5 * (m(r, c) + std::conj(m(c, r)));
        v[k++] = kSqrt2 * z.real();
        v[k++] = kSqrt2 * z.imag();
      }
    }
  }
  return v;
}

CVector complex_coords(const AlgebraElement& x) {
  Eigen::Index n = 0;
  for (const auto& b : x.blocks()) n += b.rows() * b.rows();
  CVector v(n);
  const Complex i(0.0, 1.0);
  Eigen::Index k = 0;
  for (const auto& m : x.blocks()) {
    const Eigen::Index d = m.rows();
    for (Eigen::Index r = 0; r < d; ++r) {
      v[k++] = m(r, r);
      for (Eigen::Index c = r + 1; c < d; ++c) {
        v[k++] = kInvSqrt2 * (m(c, r) + m(r, c));
        v[k++] = kInvSqrt2 * i * (m(c, r) - m(r, c));
      }
    }
  }
  return v;
}

AlgebraElement from_herm_coords(const StarAlgebra& algebra, const Eigen::Ref<const RVector>& v) {
  if (v.size() != algebra.dim()) throw StructuralError("from_herm_coords: coordinate length mismatch");
  std::vector<CMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(algebra.num_blocks()));
  Eigen::Index k = 0;
  for (int d : algebra.blocks()) {
    CMatrix m(d, d);
    for (int r = 0; r < d; ++r) {
      m(r, r) = v[k++];
      for (int c = r + 1; c < d; ++c) {
        const double re = kInvSqrt2 * v[k++];
        const double im = kInvSqrt2 * v[k++];
        m(r, c) = Complex(re, im);
        m(c, r) = Complex(re, -im);
      }
    }
    blocks.push_back(std::move(m));
  }
  return AlgebraElement(std::move(blocks));
}

AlgebraElement from_complex_coords(const StarAlgebra& algebra, const Eigen::Ref<const CVector>& v) {
  if (v.size() != algebra.dim()) throw StructuralError("from_complex_coords: coordinate length mismatch");
  const Complex i(0.0, 1.0);
  std::vector<CMatrix> blocks;
  Eigen::Index k = 0;
  for (int d : algebra.blocks()) {
    CMatrix m = CMatrix::Zero(d, d);
    for (int r = 0; r < d; ++r) {
      m(r, r) = v[k++];
      for (int c = r + 1; c < d; ++c) {
        const Complex a = kInvSqrt2 * v[k++];
        const Complex b = kInvSqrt2 * v[k++];
        m(r, c) = a + i * b;
        m(c, r) = a - i * b;
      }
    }
    blocks.push_back(std::move(m));
  }
  return AlgebraElement(std::move(blocks));
}

AlgebraElement herm_basis_element(const StarAlgebra& algebra, int k) {
  RVector e = RVector::Zero(algebra.dim());
  e[k] = 1.0;
  return from_herm_coords(algebra, e);
}

// --- spectral decomposition ------------------------------------------------

HermEig herm_eig(const AlgebraElement& x, double group_tol) {
  if (!x.is_hermitian()) throw ValidationError("herm_eig: input is not hermitian");
  struct Entry {
    double value;
    int block;
    Eigen::Index index;
  };
  std::vector<Entry> entries;
  std::vector<Eigen::SelfAdjointEigenSolver<CMatrix>> solvers;
  solvers.reserve(static_cast<std::size_t>(x.num_blocks()));
  for (int b = 0; b < x.num_blocks(); ++b) {
    const CMatrix h = 0.5 * (x.block(b) + x.block(b).adjoint());
    solvers.emplace_back(h);
    if (solvers.back().info() != Eigen::Success) throw NumericalError("herm_eig: eigensolver failed");
    const auto& ev = solvers.back().eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) entries.push_back({ev[i], b, i});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.value > b.value; });

  HermEig out;
  out.spectrum.reserve(entries.size());
  for (const auto& e : entries) out.spectrum.push_back(e.value);

  std::size_t start = 0;
  while (start < entries.size()) {
    std::size_t stop = start + 1;
    while (stop < entries.size() && entries[stop - 1].value - entries[stop].value <= group_tol) ++stop;
    double mean = 0.0;
    std::vector<CMatrix> blocks;
    for (int b = 0; b < x.num_blocks(); ++b) blocks.push_back(CMatrix::Zero(x.block(b).rows(), x.block(b).rows()));
    for (std::size_t k = start; k < stop; ++k) {
      const auto& e = entries[k];
      mean += e.value;
      const auto v = solvers[static_cast<std::size_t>(e.block)].eigenvectors().col(e.index);
      blocks[static_cast<std::size_t>(e.block)].noalias() += v * v.adjoint();
    }
    out.eigenvalues.push_back(mean / static_cast<double>(stop - start));
    out.multiplicities.push_back(static_cast<int>(stop - start));
    out.projectors.emplace_back(std::move(blocks));
    start = stop;
  }
  return out;
}

double min_eigenvalue(const AlgebraElement& x) {
  if (!x.is_hermitian()) throw ValidationError("min_eigenvalue: input is not hermitian");
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& b : x.blocks()) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (b + b.adjoint()), Eigen::EigenvaluesOnly);
    lo = std::min(lo, es.eigenvalues()[0]);
  }
  return lo;
}

// --- HermSubspace ----------------------------------------------------------

HermSubspace::HermSubspace(StarAlgebra ambient, RMatrix basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_.dim() && basis_.cols() > 0)
    throw StructuralError("HermSubspace: basis rows do not match ambient dimension");
  if (basis_.cols() == 0) basis_.resize(ambient_.dim(), 0);
}

AlgebraElement HermSubspace::element(int i) const { return from_herm_coords(ambient_, basis_.col(i)); }

std::vector<AlgebraElement> HermSubspace::elements() const {
  std::vector<AlgebraElement> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) out.push_back(element(i));
  return out;
}

RVector HermSubspace::project(const Eigen::Ref<const RVector>& v) const {
  if (dim() == 0) return RVector::Zero(v.size());
  return basis_ * (basis_.transpose() * v);
}

AlgebraElement HermSubspace::project(const AlgebraElement& x) const {
  if (!x.conforms_to(ambient_)) throw StructuralError("HermSubspace::project: element from another algebra");
  return from_herm_coords(ambient_, project(herm_coords(x)));
}

double HermSubspace::residual(const Eigen::Ref<const RVector>& v) const { return (v - project(v)).norm(); }

double HermSubspace::residual(const AlgebraElement& x) const {
  if (!x.conforms_to(ambient_)) throw StructuralError("HermSubspace::residual: element from another algebra");
  // Anti-hermitian parts never belong to a hermitian subspace.
  const double anti = (x - x.adjoint()).norm() * 0.5;
  const double r = residual(herm_coords(x));
  return std::sqrt(r * r + anti * anti);
}

bool HermSubspace::contains(const AlgebraElement& x, double tol) const {
  return residual(x) <= tol * std::max(x.norm(), 1e-300);
}

double HermSubspace::orthonormality_defect() const {
  if (dim() == 0) return 0.0;
  const RMatrix g = basis_.transpose() * basis_;
  return (g - RMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

// --- SubspaceBuilder -------------------------------------------------------

SubspaceBuilder::SubspaceBuilder(int ambient_dim, double tol) : q_(ambient_dim, std::min(ambient_dim, 32)), tol_(tol) {}

int SubspaceBuilder::add(const Eigen::Ref<const RMatrix>& candidates, double scale) {
  if (candidates.rows() != q_.rows()) throw StructuralError("SubspaceBuilder: candidate length mismatch");
  constexpr Eigen::Index kChunk = 64;
  int added = 0;
  for (Eigen::Index c0 = 0; c0 < candidates.cols(); c0 += kChunk) {
    const Eigen::Index m = std::min(kChunk, candidates.cols() - c0);
    const auto chunk = candidates.middleCols(c0, m);
    RMatrix r = chunk;
    const int base = dim_;
    if (base > 0) {
      const auto q = q_.leftCols(base);
      for (int pass = 0; pass < 2; ++pass) r.noalias() -= q * (q.transpose() * r);
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      const double ref = scale > 0.0 ? scale : chunk.col(j).norm();
      if (ref == 0.0) continue;
      RVector v = r.col(j);
      if (dim_ > base) {
        const auto q = q_.middleCols(base, dim_ - base);
        for (int pass = 0; pass < 2; ++pass) v.noalias() -= q * (q.transpose() * v);
      }
      const double n = v.norm();
      if (n <= tol_ * ref) continue;
      if (dim_ >= q_.rows())
        throw NumericalError("subspace growth exceeded the ambient dimension (numerical instability)");
      if (dim_ >= q_.cols()) q_.conservativeResize(Eigen::NoChange, std::min<Eigen::Index>(q_.rows(), 2 * q_.cols()));
      q_.col(dim_) = v / n;
      ++dim_;
      ++added;
    }
  }
  return added;
}

bool SubspaceBuilder::add_one(const Eigen::Ref<const RVector>& v, double scale) {
  return add(RMatrix(v), scale) == 1;
}

HermSubspace SubspaceBuilder::subspace(const StarAlgebra& ambient) const {
  if (ambient.dim() != q_.rows()) throw StructuralError("SubspaceBuilder: ambient mismatch");
  return HermSubspace(ambient, RMatrix(q_.leftCols(dim_)));
}

HermSubspace orthonormalize(const StarAlgebra& ambient, const std::vector<AlgebraElement>& vectors, double tol) {
  RMatrix cols(ambient.dim(), static_cast<Eigen::Index>(vectors.size()));
  double scale = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!vectors[i].conforms_to(ambient)) throw StructuralError("orthonormalize: element from another algebra");
    if (!vectors[i].is_hermitian()) throw ValidationError("orthonormalize: vectors must be hermitian");
    cols.col(static_cast<Eigen::Index>(i)) = herm_coords(vectors[i]);
    scale = std::max(scale, cols.col(static_cast<Eigen::Index>(i)).norm());
  }
  SubspaceBuilder builder(ambient.dim(), tol);
  if (scale > 0.0) builder.add(cols, scale);
  return builder.subspace(ambient);
}

// --- AntiAutomorphism ------------------------------------------------------

AntiAutomorphism::AntiAutomorphism(StarAlgebra domain, std::vector<int> permutation,
                                   std::vector<CMatrix> conjugators)
    : domain_(std::move(domain)), permutation_(std::move(permutation)), conjugators_(std::move(conjugators)) {
  const auto nb = static_cast<std::size_t>(domain_.num_blocks());
  if (permutation_.size() != nb || conjugators_.size() != nb)
    throw StructuralError("AntiAutomorphism: permutation/conjugator count must match block count");
  std::vector<int> seen(nb, 0);
  for (std::size_t b = 0; b < nb; ++b) {
    const int s = permutation_[b];
    if (s < 0 || static_cast<std::size_t>(s) >= nb || seen[static_cast<std::size_t>(s)]++)
      throw StructuralError("AntiAutomorphism: block map is not a permutation");
    const int d = domain_.block_size(static_cast<int>(b));
    if (domain_.block_size(s) != d) throw StructuralError("AntiAutomorphism: permuted blocks differ in size");
    if (conjugators_[b].rows() != d || conjugators_[b].cols() != d)
      throw StructuralError("AntiAutomorphism: conjugator shape mismatch");
  }
}

AntiAutomorphism AntiAutomorphism::transpose(const StarAlgebra& domain) {
  std::vector<int> perm(static_cast<std::size_t>(domain.num_blocks()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<CMatrix> us;
  for (int d : domain.blocks()) us.push_back(CMatrix::Identity(d, d));
  return AntiAutomorphism(domain, std::move(perm), std::move(us));
}

AlgebraElement AntiAutomorphism::operator()(const AlgebraElement& x) const {
  if (!x.conforms_to(domain_)) throw StructuralError("AntiAutomorphism: element from another algebra");
  std::vector<CMatrix> out;
  out.reserve(conjugators_.size());
  for (std::size_t b = 0; b < conjugators_.size(); ++b) {
    const CMatrix& u = conjugators_[b];
    out.push_back(u * x.block(permutation_[b]).transpose() * u.adjoint());
  }
  return AlgebraElement(std::move(out));
}

RMatrix AntiAutomorphism::herm_matrix() const {
  const int n = domain_.dim();
  RMatrix m(n, n);
  for (int k = 0; k < n; ++k) m.col(k) = herm_coords((*this)(herm_basis_element(domain_, k)));
  return m;
}

double AntiAutomorphism::involution_defect() const {
  double worst = 0.0;
  for (int k = 0; k < domain_.dim(); ++k) {
    const AlgebraElement h = herm_basis_element(domain_, k);
    worst = std::max(worst, ((*this)((*this)(h)) - h).norm());
  }
  return worst;
}

double AntiAutomorphism::reversal_residual(Rng& rng, int samples) const {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const AlgebraElement x = random_element(domain_, rng);
    const AlgebraElement y = random_element(domain_, rng);
    worst = std::max(worst, ((*this)(x * y) - (*this)(y) * (*this)(x)).norm());
    worst = std::max(worst, ((*this)(x.adjoint()) - (*this)(x).adjoint()).norm());
  }
  return worst;
}

AntiAutomorphism AntiAutomorphism::conjugate() const {
  std::vector<CMatrix> us;
  us.reserve(conjugators_.size());
  for (const auto& u : conjugators_) us.push_back(u.conjugate());
  return AntiAutomorphism(jordanc::conjugate(domain_), permutation_, std::move(us));
}

AntiAutomorphism tensor(const AntiAutomorphism& a, const AntiAutomorphism& b) {
  const int nb = b.domain().num_blocks();
  std::vector<int> perm;
  std::vector<CMatrix> us;
  for (int i = 0; i < a.domain().num_blocks(); ++i) {
    for (int j = 0; j < nb; ++j) {
      perm.push_back(a.permutation_[static_cast<std::size_t>(i)] * nb + b.permutation_[static_cast<std::size_t>(j)]);
      us.push_back(kron(a.conjugators_[static_cast<std::size_t>(i)], b.conjugators_[static_cast<std::size_t>(j)]));
    }
  }
  return AntiAutomorphism(tensor(a.domain(), b.domain()), std::move(perm), std::move(us));
}

AntiAutomorphism direct_sum(const AntiAutomorphism& a, const AntiAutomorphism& b) {
  std::vector<int> perm = a.permutation_;
  const int shift = a.domain().num_blocks();
  for (int p : b.permutation_) perm.push_back(p + shift);
  std::vector<CMatrix> us = a.conjugators_;
  us.insert(us.end(), b.conjugators_.begin(), b.conjugators_.end());
  return AntiAutomorphism(direct_sum(a.domain(), b.domain()), std::move(perm), std::move(us));
}

HermSubspace fixed_hermitian_subspace(const AntiAutomorphism& phi, double tol) {
  if (phi.involution_defect() > 1e-8) throw NumericalError("fixed_hermitian_subspace: map is not an involution");
  const int n = phi.domain().dim();
  // (I + Phi)/2 is the orthogonal projector onto the fixed hermitian elements.
  const RMatrix p = 0.5 * (RMatrix::Identity(n, n) + phi.herm_matrix());
  SubspaceBuilder builder(n, tol);
  builder.add(p, 1.0);
  return builder.subspace(phi.domain());
}

// --- generation and the antiautomorphism solver ----------------------------

int generated_star_algebra_dim(const std::vector<AlgebraElement>& generators, const StarAlgebra& ambient,
                               double tol) {
  const int n = ambient.dim();
  Eigen::MatrixXcd q(n, 0);
  std::vector<AlgebraElement> pending;
  std::vector<AlgebraElement> gens;
  for (const auto& g : generators) {
    if (!g.conforms_to(ambient)) throw StructuralError("generated_star_algebra_dim: generator from another algebra");
    gens.push_back(g);
    if (!g.is_hermitian()) gens.push_back(g.adjoint());
  }
  auto adjoin = [&](const AlgebraElement& x) {
    CVector v = complex_coords(x);
    const double ref = v.norm();
    if (ref == 0.0) return;
    for (int pass = 0; pass < 2 && q.cols() > 0; ++pass) v -= q * (q.adjoint() * v);
    const double r = v.norm();
    if (r <= tol * ref) return;
    q.conservativeResize(Eigen::NoChange, q.cols() + 1);
    q.col(q.cols() - 1) = v / r;
    pending.push_back(from_complex_coords(ambient, q.col(q.cols() - 1)));
  };
  adjoin(AlgebraElement::identity(ambient));
  while (!pending.empty()) {
    const AlgebraElement w = pending.back();
    pending.pop_back();
    for (const auto& g : gens) {
      adjoin(g * w);
      if (q.cols() == n) return n;
    }
  }
  return static_cast<int>(q.cols());
}

AntiAutomorphism solve_antiautomorphism(const std::vector<AlgebraElement>& fixed, const StarAlgebra& ambient,
                                        double tol) {
  if (fixed.empty()) throw PreconditionError("solve_antiautomorphism: empty fixed set");
  const int generated = generated_star_algebra_dim(fixed, ambient);
  if (generated != ambient.dim()) {
    std::ostringstream os;
    os << "solve_antiautomorphism: fixed set generates a *-subalgebra of dimension " << generated << " < "
       << ambient.dim() << "; the antiautomorphism is ambiguous";
    throw PreconditionError(os.str());
  }
  const int nb = ambient.num_blocks();
  std::vector<int> perm(static_cast<std::size_t>(nb), -1);
  std::vector<CMatrix> us(static_cast<std::size_t>(nb));
  for (int b = 0; b < nb; ++b) {
    const int d = ambient.block_size(b);
    const CMatrix id = CMatrix::Identity(d, d);
    int matches = 0;
    for (int c = 0; c < nb; ++c) {
      if (ambient.block_size(c) != d) continue;
      // U x_c^T = x_b U  <=>  ((x_c (x) I) - (I (x) x_b)) vec(U) = 0, column-major vec.
      CMatrix h = CMatrix::Zero(d * d, d * d);
      for (const auto& x : fixed) {
        const CMatrix a = kron(x.block(c), id) - kron(id, x.block(b));
        h.noalias() += a.adjoint() * a;
      }
      Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
      const auto& ev = es.eigenvalues();
      // h is a Gram matrix, so its eigenvalues carry roundoff at eps * max.
      const double cut = tol * std::max(ev[ev.size() - 1], 1e-300);
      if (ev[0] > cut) continue;
      if (ev.size() > 1 && ev[1] <= cut)
        throw PreconditionError("solve_antiautomorphism: intertwiner is not unique");
      CMatrix u = Eigen::Map<const CMatrix>(es.eigenvectors().col(0).data(), d, d);
      const double lambda = (u.adjoint() * u).trace().real() / d;
      u /= std::sqrt(lambda);
      if ((u.adjoint() * u - id).norm() > 1e-6)
        throw NumericalError("solve_antiautomorphism: intertwiner is not unitary");
      perm[static_cast<std::size_t>(b)] = c;
      us[static_cast<std::size_t>(b)] = u;
      ++matches;
    }
    if (matches == 0) throw NumericalError("no fixing antiautomorphism: block has no intertwiner");
    if (matches > 1) throw PreconditionError("solve_antiautomorphism: block matches several partners");
  }
  AntiAutomorphism phi(ambient, std::move(perm), std::move(us));
  for (const auto& x : fixed) {
    if ((phi(x) - x).norm() > 1e-8 * std::max(1.0, x.norm()))
      throw NumericalError("no fixing antiautomorphism: solved map does not fix the generators");
  }
  return phi;
}

// --- spin systems ----------------------------------------------------------

namespace {

CMatrix pauli(char which) {
  CMatrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (which) {
    case 'x': m << 0.0, 1.0, 1.0, 0.0; break;
    case 'y': m << 0.0, -i, i, 0.0; break;
    case 'z': m << 1.0, 0.0, 0.0, -1.0; break;
    default: m = CMatrix::Identity(2, 2);
  }
  return m;
}

CMatrix pauli_word(const std::string& word) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (char c : word) out = kron(out, pauli(c));
  return out;
}

}  // namespace

SpinSystem spin_system(int n) {
  if (n < 2) throw ValidationError("spin_system: n must be at least 2");
  const int k = n / 2;
  const bool odd = (n % 2) == 1;
  const int d = 1 << k;
  SpinSystem out{odd ? StarAlgebra(std::vector<int>{d, d}) : StarAlgebra(std::vector<int>{d}), {}};
  for (int j = 0; j < k; ++j) {
    for (char p : {'x', 'y'}) {
      std::string w(static_cast<std::size_t>(k), 'i');
      for (int t = 0; t < j; ++t) w[static_cast<std::size_t>(t)] = 'z';
      w[static_cast<std::size_t>(j)] = p;
      const CMatrix m = pauli_word(w);
      out.generators.push_back(odd ? AlgebraElement({m, m}) : AlgebraElement({m}));
    }
  }
  if (odd) {
    const CMatrix z = pauli_word(std::string(static_cast<std::size_t>(k), 'z'));
    out.generators.push_back(AlgebraElement({z, CMatrix(-z)}));
  }
  return out;
}

// --- random draws ----------------------------------------------------------

double standard_normal(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

AlgebraElement random_hermitian(const StarAlgebra& algebra, Rng& rng) {
  RVector v(algebra.dim());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = standard_normal(rng);
  return from_herm_coords(algebra, v);
}

AlgebraElement random_element(const StarAlgebra& algebra, Rng& rng) {
  std::vector<CMatrix> blocks;
  for (int d : algebra.blocks()) {
    CMatrix m(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m(r, c) = Complex(standard_normal(rng), standard_normal(rng));
    blocks.push_back(std::move(m));
  }
  return AlgebraElement(std::move(blocks));
}

CMatrix random_unitary(int d, Rng& rng) {
  CMatrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = Complex(standard_normal(rng), standard_normal(rng));
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const Complex diag = r(i, i);
    const double a = std::abs(diag);
    if (a > 0.0) q.col(i) *= diag / a;
  }
  return q;
}

}  // namespace jordanc
