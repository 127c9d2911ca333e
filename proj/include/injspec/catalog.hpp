#pragma once

#include <string>
#include <vector>

#include "injspec/core.hpp"
#include "injspec/findim.hpp"

namespace injspec {

// ---------------------------------------------------------------------------
// Built-in algebras
// ---------------------------------------------------------------------------

// F_p as a 1-dimensional algebra.
inline Algebra alg_field(int p) {
  Algebra a;
  a.p = p;
  a.dim = 1;
  a.mult = {1};
  a.unit = {1};
  return a;
}

// F_2[t]/(t^2+t+1), basis (1, t).
inline Algebra alg_f4() {
  Algebra a;
  a.p = 2;
  a.dim = 2;
  a.mult.assign(8, 0);
  a.c(0, 0, 0) = 1;              // 1*1
  a.c(0, 1, 1) = 1;              // 1*t
  a.c(1, 0, 1) = 1;              // t*1
  a.c(1, 1, 0) = a.c(1, 1, 1) = 1;  // t*t = t+1
  a.unit = {1, 0};
  return a;
}

// F_p x F_p, basis of orthogonal idempotents.
inline Algebra alg_product(int p) {
  Algebra a;
  a.p = p;
  a.dim = 2;
  a.mult.assign(8, 0);
  a.c(0, 0, 0) = 1;
  a.c(1, 1, 1) = 1;
  a.unit = {1, 1};
  return a;
}

// F_p[t]/(t^2), basis (1, t).
inline Algebra alg_dual_numbers(int p) {
  Algebra a;
  a.p = p;
  a.dim = 2;
  a.mult.assign(8, 0);
  a.c(0, 0, 0) = 1;
  a.c(0, 1, 1) = 1;
  a.c(1, 0, 1) = 1;
  a.unit = {1, 0};
  return a;
}

// Upper triangular 2x2 matrices, basis (e11, e12, e22).
inline Algebra alg_t2(int p) {
  Algebra a;
  a.p = p;
  a.dim = 3;
  a.mult.assign(27, 0);
  a.c(0, 0, 0) = 1;  // e11 e11 = e11
  a.c(0, 1, 1) = 1;  // e11 e12 = e12
  a.c(1, 2, 1) = 1;  // e12 e22 = e12
  a.c(2, 2, 2) = 1;  // e22 e22 = e22
  a.unit = {1, 0, 1};
  return a;
}

// Full 2x2 matrices, basis (e11, e12, e21, e22).
inline Algebra alg_m2(int p) {
  Algebra a;
  a.p = p;
  a.dim = 4;
  a.mult.assign(64, 0);
  auto idx = [](int i, int j) { return i * 2 + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) a.c(idx(i, j), idx(k, l), idx(i, l)) = 1;
  a.unit = {1, 0, 0, 1};
  return a;
}

// ---------------------------------------------------------------------------
// Named spaces and modules
// ---------------------------------------------------------------------------

struct CatalogSpace {
  std::string id;
  SpaceHandle space;
};

struct CatalogModule {
  std::string space_id;
  std::string id;
  ModuleHandle m;
};

inline std::vector<CatalogSpace> catalog_spaces() {
  std::vector<CatalogSpace> out;
  out.push_back({"F2", SpaceHandle::findim(alg_field(2), "F2")});
  out.push_back({"F4", SpaceHandle::findim(alg_f4(), "F4")});
  out.push_back({"F2xF2", SpaceHandle::findim(alg_product(2), "F2xF2")});
  out.push_back({"F2_t2", SpaceHandle::findim(alg_dual_numbers(2), "F2_t2")});
  out.push_back({"T2_F2", SpaceHandle::findim(alg_t2(2), "T2_F2")});
  out.push_back({"M2_F2", SpaceHandle::findim(alg_m2(2), "M2_F2")});
  out.push_back({"T2_F3", SpaceHandle::findim(alg_t2(3), "T2_F3")});
  out.push_back({"F3xF3", SpaceHandle::findim(alg_product(3), "F3xF3")});
  out.push_back({"F3_t2", SpaceHandle::findim(alg_dual_numbers(3), "F3_t2")});
  out.push_back({"M2_F3", SpaceHandle::findim(alg_m2(3), "M2_F3")});
  out.push_back({"poly2", SpaceHandle::polyline(2, "poly2")});
  out.push_back({"poly3", SpaceHandle::polyline(3, "poly3")});
  out.push_back({"graded2", SpaceHandle::gradedline(2, "graded2")});
  return out;
}

inline const CatalogSpace& catalog_space(const std::string& id) {
  static const std::vector<CatalogSpace> spaces = catalog_spaces();
  for (const CatalogSpace& s : spaces)
    if (s.id == id) return s;
  fail(errc::invalid_input, "unknown catalog space: " + id);
}

namespace detail {

inline PolyModule pmod(std::vector<Poly> factors, int rank) {
  PolyModule m;
  m.factors = std::move(factors);
  m.rank = rank;
  return m;
}

inline GradedModule gmod(std::vector<int> frees, std::vector<std::pair<int, int>> torsions) {
  GradedModule m;
  m.frees = std::move(frees);
  m.torsions = std::move(torsions);
  std::sort(m.frees.begin(), m.frees.end());
  std::sort(m.torsions.begin(), m.torsions.end());
  return m;
}

}  // namespace detail

// Modules of a finite-dimensional catalog space: the regular module, every
// simple, small direct sums, and the indecomposables that the worked examples
// rely on.  All dimensions stay <= 4 so brute-force oracles remain feasible.
inline std::vector<CatalogModule> catalog_findim_modules(const std::string& space_id) {
  const Algebra& A = catalog_space(space_id).space.alg;
  const PrimeField F = A.field();
  std::vector<CatalogModule> out;
  auto add = [&](const std::string& id, Rep r) {
    out.push_back({space_id, id, ModuleHandle::findim(std::move(r))});
  };
  Rep reg = regular_rep(A);
  add("R", reg);
  RadicalSimples rs = radical_simples(A);
  for (size_t i = 0; i < rs.simples.size(); ++i) add("S" + std::to_string(i), rs.simples[i]);
  for (size_t i = 0; i < rs.simples.size(); ++i)
    for (size_t j = i; j < rs.simples.size(); ++j) {
      if (rs.simples[i].dim + rs.simples[j].dim > 4) continue;
      add("S" + std::to_string(i) + "+S" + std::to_string(j),
          direct_sum(F, rs.simples[i], rs.simples[j]));
    }
  if (space_id == "T2_F2" || space_id == "T2_F3") {
    // P1 = e11*T2, basis (e11, e12); its socle is the e12 line.
    std::vector<int> e11{1, 0, 0};
    Rep P1 = sub_rep(A, reg, cyclic_span(A, reg, e11));
    add("P1", P1);
    for (size_t i = 0; i < rs.simples.size(); ++i)
      add("P1+S" + std::to_string(i), direct_sum(F, P1, rs.simples[i]));
    if (A.p == 2) add("P1+P1", direct_sum(F, P1, P1));
  }
  if (space_id == "F2_t2" || space_id == "F3_t2") {
    add("R+S0", direct_sum(F, reg, rs.simples[0]));
    add("R+R", direct_sum(F, reg, reg));
  }
  if (space_id == "F2xF2" || space_id == "F3xF3") add("R+R", direct_sum(F, reg, reg));
  if (space_id == "F4") add("R+R", direct_sum(F, reg, reg));
  return out;
}

inline std::vector<CatalogModule> catalog_polyline_modules(const std::string& space_id) {
  const int p = catalog_space(space_id).space.p;
  const PrimeField F(p);
  std::vector<CatalogModule> out;
  auto add = [&](const std::string& id, PolyModule m) {
    out.push_back({space_id, id, ModuleHandle::polyline(std::move(m))});
  };
  using detail::pmod;
  Poly x = p_x();
  Poly x1 = Poly({1, 1});
  add("free1", pmod({}, 1));
  add("free2", pmod({}, 2));
  add("t_x", pmod({x}, 0));
  add("t_x1", pmod({x1}, 0));
  add("t_x^2", pmod({Poly({0, 0, 1})}, 0));
  add("t_x|x^2+x", pmod({x, p_mul(F, x, x1)}, 0));
  add("iso_x,x", pmod({x, x}, 0));
  add("mixed_x^2+x_free", pmod({p_mul(F, x, x1)}, 1));
  if (p == 2) {
    add("t_irr2", pmod({Poly({1, 1, 1})}, 0));                       // x^2+x+1
    add("chain_x+1|x^2+x", pmod({x1, p_mul(F, x, x1)}, 0));
  } else {
    add("t_irr2", pmod({Poly({1, 0, 1})}, 0));                       // x^2+1 over F_3
    add("mixed_x_free", pmod({x}, 1));
  }
  return out;
}

inline std::vector<CatalogModule> catalog_graded_modules(const std::string& space_id) {
  std::vector<CatalogModule> out;
  auto add = [&](const std::string& id, GradedModule m) {
    out.push_back({space_id, id, ModuleHandle::gradedline(std::move(m))});
  };
  using detail::gmod;
  add("free0", gmod({0}, {}));
  add("free2", gmod({2}, {}));
  add("free5", gmod({5}, {}));
  add("free0,2", gmod({0, 2}, {}));
  add("s0", gmod({}, {{0, 1}}));
  add("s1", gmod({}, {{1, 1}}));
  add("s5", gmod({}, {{5, 1}}));
  add("t(1,3)", gmod({}, {{1, 3}}));
  add("s0+s1", gmod({}, {{0, 1}, {1, 1}}));
  add("s3+s3", gmod({}, {{3, 1}, {3, 1}}));
  add("mix_free0_s-5", gmod({0}, {{-5, 1}}));
  add("t(0,2)", gmod({}, {{0, 2}}));
  return out;
}

inline std::vector<CatalogModule> catalog_modules(const std::string& space_id) {
  const CatalogSpace& s = catalog_space(space_id);
  switch (s.space.backend) {
    case backend_t::findim: return catalog_findim_modules(space_id);
    case backend_t::polyline: return catalog_polyline_modules(space_id);
    case backend_t::gradedline: return catalog_graded_modules(space_id);
  }
  return {};
}

inline ModuleHandle catalog_module(const std::string& space_id, const std::string& module_id) {
  for (const CatalogModule& m : catalog_modules(space_id))
    if (m.id == module_id) return m.m;
  fail(errc::invalid_input, "unknown catalog module: " + space_id + "/" + module_id);
}

}  // namespace injspec
