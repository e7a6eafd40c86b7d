#include "betticone/module_engine.hpp"

#include "betticone/error.hpp"

#include <algorithm>
#include <string>

namespace betticone {

namespace {

bool same_shape(const Matrix& m, std::size_t rows, std::size_t cols) {
  return m.rows() == rows && m.cols() == cols;
}

}  // namespace

FiniteModule::FiniteModule(DimMap dims, MapTable mult_x, MapTable mult_y) {
  for (const auto& [a, d] : dims) {
    if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension at " + to_string(a));
    if (d > 0) dims_.emplace(a, d);
  }
  auto install = [this](MapTable& source, MapTable& target, Bidegree step, const char* name) {
    for (auto& [a, m] : source) {
      const auto rows = static_cast<std::size_t>(dim(a + step));
      const auto cols = static_cast<std::size_t>(dim(a));
      if (!same_shape(m, rows, cols)) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(name) + " map at " + to_string(a) + " has the wrong shape");
      }
      if (rows > 0 && cols > 0 && !m.is_zero()) target.emplace(a, std::move(m));
    }
  };
  install(mult_x, mult_x_, kDegX, "x");
  install(mult_y, mult_y_, kDegY, "y");
  if (!is_commutative()) {
    throw Error(ErrorCode::NotCommutative, "x and y multiplication maps do not commute");
  }
}

int FiniteModule::dim(Bidegree a) const {
  const auto it = dims_.find(a);
  return it == dims_.end() ? 0 : it->second;
}

Matrix FiniteModule::x_map(Bidegree a) const {
  const auto it = mult_x_.find(a);
  if (it != mult_x_.end()) return it->second;
  return Matrix(static_cast<std::size_t>(dim(a + kDegX)), static_cast<std::size_t>(dim(a)));
}

Matrix FiniteModule::y_map(Bidegree a) const {
  const auto it = mult_y_.find(a);
  if (it != mult_y_.end()) return it->second;
  return Matrix(static_cast<std::size_t>(dim(a + kDegY)), static_cast<std::size_t>(dim(a)));
}

long long FiniteModule::total_dimension() const {
  long long total = 0;
  for (const auto& [a, d] : dims_) total += d;
  return total;
}

std::optional<Box> FiniteModule::support_box() const {
  if (dims_.empty()) return std::nullopt;
  Box box{dims_.begin()->first, dims_.begin()->first};
  for (const auto& [a, d] : dims_) {
    box.lo = {std::min(box.lo.x, a.x), std::min(box.lo.y, a.y)};
    box.hi = {std::max(box.hi.x, a.x), std::max(box.hi.y, a.y)};
  }
  return box;
}

bool FiniteModule::is_commutative() const {
  for (const auto& [a, d] : dims_) {
    const Matrix yx = y_map(a + kDegX) * x_map(a);
    const Matrix xy = x_map(a + kDegY) * y_map(a);
    if (!(yx == xy)) return false;
  }
  return true;
}

FiniteModule FiniteModule::translated(Bidegree shift) const {
  DimMap dims;
  MapTable mx;
  MapTable my;
  for (const auto& [a, d] : dims_) dims.emplace(a + shift, d);
  for (const auto& [a, m] : mult_x_) mx.emplace(a + shift, m);
  for (const auto& [a, m] : mult_y_) my.emplace(a + shift, m);
  return FiniteModule(std::move(dims), std::move(mx), std::move(my));
}

FiniteModule matlis_dual(const FiniteModule& m) {
  FiniteModule::DimMap dims;
  FiniteModule::MapTable mx;
  FiniteModule::MapTable my;
  const Bidegree zero{0, 0};
  for (const auto& [a, d] : m.dims()) dims.emplace(zero - a, d);
  // (M^v)_b -> (M^v)_{b+(1,0)} is the transpose of M_{-b-(1,0)} -> M_{-b}.
  // Every nonzero dual map has nonzero source or target, so it suffices to
  // visit b = -a and b = -a - step for a in the support.
  for (const auto& [a, d] : m.dims()) {
    for (Bidegree b : {zero - a, zero - a - kDegX}) {
      mx.insert_or_assign(b, m.x_map(zero - b - kDegX).transpose());
    }
    for (Bidegree b : {zero - a, zero - a - kDegY}) {
      my.insert_or_assign(b, m.y_map(zero - b - kDegY).transpose());
    }
  }
  return FiniteModule(std::move(dims), std::move(mx), std::move(my));
}

std::vector<Bidegree> minimal_generators(std::vector<Bidegree> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Bidegree> out;
  for (const Bidegree& g : gens) {
    const bool redundant = std::any_of(gens.begin(), gens.end(), [&](const Bidegree& h) {
      return h != g && h.divides(g);
    });
    if (!redundant) out.push_back(g);
  }
  return out;
}

MonomialPair MonomialPair::normalized() const {
  return MonomialPair{minimal_generators(gens_I), minimal_generators(gens_J)};
}

bool contains(const std::vector<Bidegree>& ideal_gens, Bidegree monomial) {
  return std::any_of(ideal_gens.begin(), ideal_gens.end(),
                     [&](const Bidegree& g) { return g.divides(monomial); });
}

FiniteModule monomial_quotient(const MonomialPair& pair) {
  const MonomialPair p = pair.normalized();
  for (const Bidegree& j : p.gens_J) {
    if (!contains(p.gens_I, j)) {
      throw Error(ErrorCode::NotContained, "generator " + to_string(j) + " of J is not in I");
    }
  }
  if (p.gens_I.empty()) return FiniteModule();
  for (const Bidegree& g : p.gens_I) {
    const bool x_escapes = std::any_of(p.gens_J.begin(), p.gens_J.end(),
                                       [&](const Bidegree& h) { return h.y <= g.y; });
    const bool y_escapes = std::any_of(p.gens_J.begin(), p.gens_J.end(),
                                       [&](const Bidegree& h) { return h.x <= g.x; });
    if (!x_escapes || !y_escapes) {
      throw Error(ErrorCode::NotFiniteLength, "I/J is infinite above " + to_string(g));
    }
  }
  Bidegree lo = p.gens_I.front();
  Bidegree hi{0, 0};
  for (const Bidegree& g : p.gens_I) lo = {std::min(lo.x, g.x), std::min(lo.y, g.y)};
  for (const Bidegree& h : p.gens_J) hi = {std::max(hi.x, h.x), std::max(hi.y, h.y)};

  auto in_region = [&](Bidegree a) { return contains(p.gens_I, a) && !contains(p.gens_J, a); };
  FiniteModule::DimMap dims;
  FiniteModule::MapTable mx;
  FiniteModule::MapTable my;
  for (int ax = lo.x; ax < hi.x; ++ax) {
    for (int ay = lo.y; ay < hi.y; ++ay) {
      const Bidegree a{ax, ay};
      if (!in_region(a)) continue;
      dims.emplace(a, 1);
      if (in_region(a + kDegX)) mx.emplace(a, Matrix::identity(1));
      if (in_region(a + kDegY)) my.emplace(a, Matrix::identity(1));
    }
  }
  return FiniteModule(std::move(dims), std::move(mx), std::move(my));
}

void PresentationMatrix::validate() const {
  if (entries.size() != row_degrees.size()) {
    throw Error(ErrorCode::InvalidArgument, "presentation has wrong number of rows");
  }
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (entries[r].size() != col_degrees.size()) {
      throw Error(ErrorCode::InvalidArgument, "presentation has wrong number of columns");
    }
    for (std::size_t c = 0; c < col_degrees.size(); ++c) {
      const Bidegree forced = col_degrees[c] - row_degrees[r];
      for (const Term& term : entries[r][c]) {
        if (term.coefficient == 0) continue;
        if (term.exponent != forced || term.exponent.x < 0 || term.exponent.y < 0) {
          throw Error(ErrorCode::InvalidArgument,
                      "entry (" + std::to_string(r) + "," + std::to_string(c) +
                          ") must be homogeneous of bidegree " + to_string(forced));
        }
      }
    }
  }
}

Rational PresentationMatrix::scalar(std::size_t r, std::size_t c) const {
  Rational sum = 0;
  for (const Term& term : entries[r][c]) sum += term.coefficient;
  return sum;
}

namespace {

// Basis of (⊕ T(-g_k))_a: the generators with g_k <= a, in list order.
std::vector<std::size_t> free_basis(const std::vector<Bidegree>& gens, Bidegree a) {
  std::vector<std::size_t> basis;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].divides(a)) basis.push_back(k);
  }
  return basis;
}

// phi_a : (F_1)_a -> (F_0)_a.
Matrix presentation_at(const PresentationMatrix& m, Bidegree a) {
  const auto rows = free_basis(m.row_degrees, a);
  const auto cols = free_basis(m.col_degrees, a);
  Matrix phi(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) phi(r, c) = m.scalar(rows[r], cols[c]);
  }
  return phi;
}

// Multiplication by a monomial of bidegree step, (F)_a -> (F)_{a+step}.
Matrix free_multiplication(const std::vector<Bidegree>& gens, Bidegree a, Bidegree step) {
  const auto source = free_basis(gens, a);
  const auto target = free_basis(gens, a + step);
  Matrix e(target.size(), source.size());
  for (std::size_t s = 0; s < source.size(); ++s) {
    const auto it = std::find(target.begin(), target.end(), source[s]);
    e(static_cast<std::size_t>(it - target.begin()), s) = 1;
  }
  return e;
}

Bidegree componentwise_min(const std::vector<Bidegree>& v) {
  Bidegree lo = v.front();
  for (const Bidegree& a : v) lo = {std::min(lo.x, a.x), std::min(lo.y, a.y)};
  return lo;
}

Bidegree hull_max(const PresentationMatrix& m) {
  Bidegree hi = m.row_degrees.empty() ? m.col_degrees.front() : m.row_degrees.front();
  for (const auto* list : {&m.row_degrees, &m.col_degrees}) {
    for (const Bidegree& a : *list) hi = {std::max(hi.x, a.x), std::max(hi.y, a.y)};
  }
  return hi;
}

bool in_outer_layers(const Box& box, Bidegree a) {
  return a.x >= box.hi.x - 1 || a.y >= box.hi.y - 1;
}

// Coset data for coker phi_a: reduced rows of the image and the free coordinates.
struct Cokernel {
  RowEchelon image;                    // rref of phi_a^T
  std::vector<std::size_t> free_cols;  // coordinates of (F_0)_a spanning the quotient
  std::size_t ambient = 0;

  Matrix coordinates(const Matrix& vectors) const {
    // Reduce each column modulo the image, then read off the free coordinates.
    Matrix reduced = vectors;
    for (std::size_t r = 0; r < image.pivots.size(); ++r) {
      const std::size_t p = image.pivots[r];
      for (std::size_t c = 0; c < reduced.cols(); ++c) {
        const Rational factor = reduced(p, c);
        if (factor == 0) continue;
        for (std::size_t k = 0; k < ambient; ++k) {
          if (image.reduced(r, k) != 0) reduced(k, c) -= factor * image.reduced(r, k);
        }
      }
    }
    Matrix out(free_cols.size(), vectors.cols());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
      for (std::size_t c = 0; c < vectors.cols(); ++c) out(f, c) = reduced(free_cols[f], c);
    }
    return out;
  }
};

Cokernel cokernel_at(const PresentationMatrix& m, Bidegree a) {
  Cokernel ck;
  const Matrix phi = presentation_at(m, a);
  ck.ambient = phi.rows();
  ck.image = row_reduce(phi.transpose());
  std::vector<bool> pivot(ck.ambient, false);
  for (std::size_t p : ck.image.pivots) pivot[p] = true;
  for (std::size_t k = 0; k < ck.ambient; ++k) {
    if (!pivot[k]) ck.free_cols.push_back(k);
  }
  return ck;
}

// Embeds the quotient basis at a (standard vectors on the free coordinates)
// into (F_0)_a.
Matrix quotient_basis(const Cokernel& ck) {
  Matrix basis(ck.ambient, ck.free_cols.size());
  for (std::size_t f = 0; f < ck.free_cols.size(); ++f) basis(ck.free_cols[f], f) = 1;
  return basis;
}

FiniteModule build_cokernel(const PresentationMatrix& m, const Box& box) {
  std::map<Bidegree, Cokernel> pieces;
  FiniteModule::DimMap dims;
  for (int ax = box.lo.x; ax <= box.hi.x; ++ax) {
    for (int ay = box.lo.y; ay <= box.hi.y; ++ay) {
      const Bidegree a{ax, ay};
      Cokernel ck = cokernel_at(m, a);
      if (ck.free_cols.empty()) continue;
      if (in_outer_layers(box, a)) {
        throw Error(ErrorCode::NotFiniteLengthWithinBox,
                    "cokernel is nonzero at " + to_string(a) + " near the box boundary");
      }
      dims.emplace(a, static_cast<int>(ck.free_cols.size()));
      pieces.emplace(a, std::move(ck));
    }
  }
  FiniteModule::MapTable mx;
  FiniteModule::MapTable my;
  for (const auto& [a, ck] : pieces) {
    const Matrix basis = quotient_basis(ck);
    for (auto [step, table] : {std::pair{kDegX, &mx}, std::pair{kDegY, &my}}) {
      const auto target = pieces.find(a + step);
      if (target == pieces.end()) continue;
      const Matrix moved = free_multiplication(m.row_degrees, a, step) * basis;
      table->emplace(a, target->second.coordinates(moved));
    }
  }
  return FiniteModule(std::move(dims), std::move(mx), std::move(my));
}

template <typename Compute>
auto with_growing_box(const PresentationMatrix& m, Bidegree lo, Compute compute, ErrorCode code,
                      const char* what) {
  const Bidegree hull = hull_max(m);
  for (int margin = 2; margin <= 64; margin *= 2) {
    try {
      return compute(Box{lo, {hull.x + margin, hull.y + margin}});
    } catch (const Error& e) {
      if (e.code() != code) throw;
    }
  }
  throw Error(code, std::string(what) + " does not stabilize within margin 64");
}

}  // namespace

FiniteModule coker_presentation(const PresentationMatrix& m, const Box& box) {
  m.validate();
  if (m.row_degrees.empty()) return FiniteModule();
  const Bidegree gens_lo = componentwise_min(m.row_degrees);
  Box effective{{std::min(box.lo.x, gens_lo.x), std::min(box.lo.y, gens_lo.y)}, box.hi};
  return build_cokernel(m, effective);
}

FiniteModule coker_presentation(const PresentationMatrix& m) {
  m.validate();
  if (m.row_degrees.empty()) return FiniteModule();
  return with_growing_box(
      m, componentwise_min(m.row_degrees), [&](const Box& box) { return build_cokernel(m, box); },
      ErrorCode::NotFiniteLengthWithinBox, "cokernel");
}

BigradedBettiTable bigraded_betti(const FiniteModule& m) {
  const auto support = m.support_box();
  if (!support) return BigradedBettiTable();
  BigradedBettiTable::Entries entries;
  const Bidegree diag{1, 1};
  for (int ax = support->lo.x; ax <= support->hi.x + 1; ++ax) {
    for (int ay = support->lo.y; ay <= support->hi.y + 1; ++ay) {
      const Bidegree a{ax, ay};
      const int top = m.dim(a);
      const int left = m.dim(a - kDegX);
      const int down = m.dim(a - kDegY);
      const int corner = m.dim(a - diag);
      if (top + left + down + corner == 0) continue;

      // d1 = [x | y] : M_{a-(1,0)} ⊕ M_{a-(0,1)} -> M_a
      const Matrix d1 = hstack(m.x_map(a - kDegX), m.y_map(a - kDegY));
      // d2 = [y ; -x] : M_{a-(1,1)} -> M_{a-(1,0)} ⊕ M_{a-(0,1)}
      const Matrix d2 = vstack(m.y_map(a - diag), -m.x_map(a - diag));
      const auto r1 = static_cast<int>(rank(d1));
      const auto r2 = static_cast<int>(rank(d2));
      const int b0 = top - r1;
      const int b1 = left + down - r1 - r2;
      const int b2 = corner - r2;
      if (b0) entries.emplace(BigradedKey{0, a}, b0);
      if (b1) entries.emplace(BigradedKey{1, a}, b1);
      if (b2) entries.emplace(BigradedKey{2, a}, b2);
    }
  }
  return BigradedBettiTable(std::move(entries));
}

namespace {

std::vector<KernelGenerator> kernel_generators_in(const PresentationMatrix& m, const Box& box) {
  std::map<Bidegree, Matrix> kernels;
  std::vector<KernelGenerator> out;
  for (int ax = box.lo.x; ax <= box.hi.x; ++ax) {
    for (int ay = box.lo.y; ay <= box.hi.y; ++ay) {
      const Bidegree a{ax, ay};
      Matrix kernel = nullspace(presentation_at(m, a));
      if (kernel.cols() == 0) continue;
      Matrix generated(kernel.rows(), 0);
      for (Bidegree step : {kDegX, kDegY}) {
        const auto below = kernels.find(a - step);
        if (below == kernels.end()) continue;
        generated = hstack(generated,
                           free_multiplication(m.col_degrees, a - step, step) * below->second);
      }
      const auto fresh = static_cast<int>(kernel.cols() - rank(generated));
      if (fresh > 0) {
        if (in_outer_layers(box, a)) {
          throw Error(ErrorCode::KernelNotFinitelyResolvedInBox,
                      "kernel generator at " + to_string(a) + " near the box boundary");
        }
        out.push_back({a, fresh});
      }
      kernels.emplace(a, std::move(kernel));
    }
  }
  return out;
}

}  // namespace

std::vector<KernelGenerator> kernel_generator_degrees(const PresentationMatrix& m,
                                                      const Box& box) {
  m.validate();
  if (m.col_degrees.empty()) return {};
  const Bidegree gens_lo = componentwise_min(m.col_degrees);
  return kernel_generators_in(
      m, Box{{std::min(box.lo.x, gens_lo.x), std::min(box.lo.y, gens_lo.y)}, box.hi});
}

std::vector<KernelGenerator> kernel_generator_degrees(const PresentationMatrix& m) {
  m.validate();
  if (m.col_degrees.empty()) return {};
  return with_growing_box(
      m, componentwise_min(m.col_degrees),
      [&](const Box& box) { return kernel_generators_in(m, box); },
      ErrorCode::KernelNotFinitelyResolvedInBox, "kernel");
}

}  // namespace betticone
