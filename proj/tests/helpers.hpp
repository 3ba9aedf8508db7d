#pragma once

#include "sktlab/model.hpp"

namespace testutil {

inline sktlab::Vec vec(std::initializer_list<double> xs) {
  sktlab::Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline sktlab::Mat mat2(double a11, double a12, double a21, double a22) {
  sktlab::Mat m(2, 2);
  m << a11, a12, a21, a22;
  return m;
}

inline sktlab::SktCoefficients skt(double a10, double a20, double a11, double a12, double a21, double a22) {
  sktlab::SktCoefficients c;
  c.a0 = vec({a10, a20});
  c.a = mat2(a11, a12, a21, a22);
  return c;
}

inline sktlab::ModelSpec skt_model(const sktlab::SktCoefficients& c,
                                   sktlab::ReactionModel r = sktlab::reaction_none(2)) {
  return sktlab::make_skt(c, sktlab::Vec::Ones(c.species()), std::move(r));
}

inline sktlab::LvTable lv(double a1, double a2, double b1, double b2, double c1, double c2) {
  sktlab::LvTable t;
  t.a[0] = a1, t.a[1] = a2;
  t.b[0] = b1, t.b[1] = b2;
  t.c[0] = c1, t.c[1] = c2;
  return t;
}

}  // namespace testutil
