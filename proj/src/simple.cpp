#include "loopforge/simple.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace loopforge {

std::string Weight::str() const {
  if (eps.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : eps) {
    if (c > 0 && !first) os << "+";
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c;
    os << "e" << i;
    first = false;
  }
  return os.str();
}

std::vector<Weight> roots_of(RootSystem rs, int rank) {
  std::vector<Weight> out;
  auto eps = [](int i, int c = 1) { return Weight::unit(i, c); };
  bool shorts = rs == RootSystem::B || rs == RootSystem::BC;
  bool doubles = rs == RootSystem::C || rs == RootSystem::BC;
  bool sums = rs != RootSystem::A;
  if (rs == RootSystem::A) {
    for (int i = 1; i <= rank; ++i)
      for (int j = 1; j <= rank; ++j)
        if (i != j) out.push_back(eps(i) - eps(j));
    return out;
  }
  if (shorts)
    for (int i = 1; i <= rank; ++i) {
      out.push_back(eps(i));
      out.push_back(-eps(i));
    }
  if (doubles)
    for (int i = 1; i <= rank; ++i) {
      out.push_back(eps(i, 2));
      out.push_back(eps(i, -2));
    }
  if (sums)
    for (int i = 1; i <= rank; ++i)
      for (int j = 1; j <= rank; ++j) {
        if (i != j) out.push_back(eps(i) - eps(j));
        if (i < j) {
          out.push_back(eps(i) + eps(j));
          out.push_back(-(eps(i) + eps(j)));
        }
      }
  return out;
}

bool is_root(RootSystem rs, int rank, const Weight& mu) {
  auto all = roots_of(rs, rank);
  return std::find(all.begin(), all.end(), mu) != all.end();
}

LengthClass root_length(RootSystem rs, int rank, const Weight& mu) {
  if (!is_root(rs, rank, mu)) throw DomainError("root_length: not a root");
  auto all = roots_of(rs, rank);
  int minn = 0;
  for (const auto& r : all) {
    int n2 = r.norm2();
    if (minn == 0 || n2 < minn) minn = n2;
  }
  if (mu.norm2() == minn) return LengthClass::Short;
  // extra long = two times a short root of the same system
  bool even = true;
  Weight half;
  for (const auto& [i, c] : mu.eps) {
    if (c % 2 != 0) even = false;
    half.set(i, c / 2);
  }
  if (even && is_root(rs, rank, half) && half.norm2() == minn)
    return LengthClass::ExtraLong;
  return LengthClass::Long;
}

namespace {

RootVector rv(const Weight& w, Mat x) {
  RootVector r;
  r.w = w;
  r.x = std::move(x);
  r.label = "g(" + w.str() + ")";
  return r;
}

Mat two_entry(IndexUniverse u, int i1, int j1, int i2, int j2, int sign2) {
  Mat m(u);
  m.set(i1, j1, 1);
  m.add_to(i2, j2, Rational(sign2));
  return m;
}

}  // namespace

std::vector<RootVector> root_basis(SimpleType t) {
  const int n = t.rank;
  IndexUniverse u = t.universe();
  auto eps = [](int i, int c = 1) { return Weight::unit(i, c); };
  std::vector<RootVector> out;
  switch (t.letter) {
    case SimpleLetter::A:
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j) out.push_back(rv(eps(i) - eps(j), unit_matrix(u, i, j)));
      break;
    case SimpleLetter::B: {
      const int x = 2 * n + 1;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j)
            out.push_back(
                rv(eps(i) - eps(j), two_entry(u, i, j, n + j, n + i, -1)));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          out.push_back(
              rv(eps(i) + eps(j), two_entry(u, i, n + j, j, n + i, -1)));
          out.push_back(
              rv(-(eps(i) + eps(j)), two_entry(u, n + j, i, n + i, j, -1)));
        }
      for (int i = 1; i <= n; ++i) {
        out.push_back(rv(eps(i), two_entry(u, i, x, x, n + i, -1)));
        out.push_back(rv(-eps(i), two_entry(u, x, i, n + i, x, -1)));
      }
      break;
    }
    case SimpleLetter::C:
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j)
            out.push_back(
                rv(eps(i) - eps(j), two_entry(u, i, j, n + j, n + i, -1)));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          out.push_back(
              rv(eps(i) + eps(j), two_entry(u, i, n + j, j, n + i, +1)));
          out.push_back(
              rv(-(eps(i) + eps(j)), two_entry(u, n + j, i, n + i, j, +1)));
        }
      for (int i = 1; i <= n; ++i) {
        out.push_back(rv(eps(i, 2), unit_matrix(u, i, n + i)));
        out.push_back(rv(eps(i, -2), unit_matrix(u, n + i, i)));
      }
      break;
    case SimpleLetter::D:
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j)
            out.push_back(
                rv(eps(i) - eps(j), two_entry(u, i, j, n + j, n + i, -1)));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          out.push_back(
              rv(eps(i) + eps(j), two_entry(u, i, n + j, j, n + i, -1)));
          out.push_back(
              rv(-(eps(i) + eps(j)), two_entry(u, n + j, i, n + i, j, -1)));
        }
      break;
  }
  return out;
}

std::vector<DiagExt> cartan_basis(SimpleType t) {
  const int n = t.rank;
  IndexUniverse u = t.universe();
  std::vector<DiagExt> out;
  if (t.letter == SimpleLetter::A) {
    for (int i = 1; i < n; ++i) {
      DiagExt h(u);
      h.set_finite(i, 1);
      h.set_finite(i + 1, -1);
      out.push_back(h);
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      DiagExt h(u);
      h.set_finite(i, 1);
      h.set_finite(n + i, -1);
      out.push_back(h);
    }
  }
  return out;
}

std::vector<RootVector> basis_of(SimpleType t) {
  auto out = root_basis(t);
  int k = 0;
  for (const auto& h : cartan_basis(t)) {
    RootVector r;
    r.w = Weight{};
    r.x = h.finite_matrix();
    r.label = "h" + std::to_string(++k);
    out.push_back(std::move(r));
  }
  return out;
}

DiagExt coroot(SimpleType t, const Weight& mu) {
  if (!is_root(t.root_system(), t.rank, mu))
    throw DomainError("coroot: not a root of the type");
  const int n2 = mu.norm2();
  DiagExt h(t.universe());
  for (const auto& [i, c] : mu.eps) {
    Rational v = Rational(2 * c) / Rational(n2);
    h.add_finite(i, v);
    if (t.letter != SimpleLetter::A) h.add_finite(t.rank + i, -v);
  }
  return h;
}

bool in_fixed_algebra(SType type, const Mat& x) { return sigma(type, x) == x; }
bool in_minus_space(SType type, const Mat& x) {
  return sigma(type, x) == -x;
}

namespace {

ModuleVector mv_mat(const Weight& w, Mat x) {
  ModuleVector m;
  m.w = w;
  m.x = std::move(x);
  m.label = "s(" + w.str() + ")";
  return m;
}

}  // namespace

std::vector<ModuleVector> module_basis(ModuleKind kind, SimpleType g) {
  const int n = g.rank;
  IndexUniverse u = g.universe();
  auto eps = [](int i, int c = 1) { return Weight::unit(i, c); };
  std::vector<ModuleVector> out;

  if (kind == ModuleKind::NaturalVector) {
    if (g.letter != SimpleLetter::B)
      throw DomainError("natural module: expects type B");
    for (int i = 1; i <= 2 * n + 1; ++i) {
      ModuleVector m;
      m.w = i <= n ? eps(i) : (i <= 2 * n ? -eps(i - n) : Weight{});
      m.v = unit_vector(u, i);
      m.label = "v" + std::to_string(i);
      out.push_back(std::move(m));
    }
    return out;
  }

  // SymmetricPart: {x in sl | s x = x^t s}, the (-1)-eigenspace of sigma.
  if (g.letter == SimpleLetter::C) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j)
          out.push_back(
              mv_mat(eps(i) - eps(j), two_entry(u, i, j, n + j, n + i, +1)));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        out.push_back(
            mv_mat(eps(i) + eps(j), two_entry(u, i, n + j, j, n + i, -1)));
        out.push_back(
            mv_mat(-(eps(i) + eps(j)), two_entry(u, n + j, i, n + i, j, -1)));
      }
    for (int i = 1; i < n; ++i) {
      Mat z(u);
      z.set(i, i, 1);
      z.set(n + i, n + i, 1);
      z.set(i + 1, i + 1, -1);
      z.set(n + i + 1, n + i + 1, -1);
      out.push_back(mv_mat(Weight{}, z));
      out.back().label = "s0_" + std::to_string(i);
    }
    return out;
  }
  if (g.letter == SimpleLetter::B) {
    const int x = 2 * n + 1;
    for (int i = 1; i <= n; ++i) {
      out.push_back(mv_mat(eps(i, 2), unit_matrix(u, i, n + i)));
      out.push_back(mv_mat(eps(i, -2), unit_matrix(u, n + i, i)));
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j)
          out.push_back(
              mv_mat(eps(i) - eps(j), two_entry(u, i, j, n + j, n + i, +1)));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        out.push_back(
            mv_mat(eps(i) + eps(j), two_entry(u, i, n + j, j, n + i, +1)));
        out.push_back(
            mv_mat(-(eps(i) + eps(j)), two_entry(u, n + j, i, n + i, j, +1)));
      }
    for (int i = 1; i <= n; ++i) {
      out.push_back(mv_mat(eps(i), two_entry(u, i, x, x, n + i, +1)));
      out.push_back(mv_mat(-eps(i), two_entry(u, x, i, n + i, x, +1)));
    }
    // weight-0 part: traceless diagonals with equal paired entries
    for (int i = 1; i < n; ++i) {
      Mat z(u);
      z.set(i, i, 1);
      z.set(n + i, n + i, 1);
      z.set(i + 1, i + 1, -1);
      z.set(n + i + 1, n + i + 1, -1);
      out.push_back(mv_mat(Weight{}, z));
      out.back().label = "s0_" + std::to_string(i);
    }
    {
      Mat z(u);
      z.set(n, n, 1);
      z.set(2 * n, 2 * n, 1);
      z.set(x, x, -2);
      out.push_back(mv_mat(Weight{}, z));
      out.back().label = "s0_" + std::to_string(n);
    }
    return out;
  }
  throw DomainError("symmetric-part module: expects type B or C");
}

SparseVector module_action(const Mat& x, const SparseVector& v) {
  return mat_vec(x, v);
}
Mat module_action(const Mat& x, const Mat& v) { return mat_bracket(x, v); }

}  // namespace loopforge
