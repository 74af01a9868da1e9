#include "coquartic/tritensor/projective.hpp"

#include <sstream>

namespace coq {

ComplexPoint normalized(const ComplexPoint& p) {
  int best = 0;
  Real best_norm = p[0].norm();
  for (int i = 1; i < 4; ++i) {
    Real n = p[i].norm();
    if (n > best_norm) {
      best = i;
      best_norm = std::move(n);
    }
  }
  Complex inv = Complex(1L, 0L, p[best].precision()) / p[best];
  Vector4<Complex> out = p.x;
  for (Complex& c : out) c = c * inv;
  return ComplexPoint(std::move(out));
}

Real projective_distance(const ComplexPoint& p, const ComplexPoint& q) {
  long prec = std::max(p[0].precision(), q[0].precision());
  Real wedge(prec);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) wedge += (p[i] * q[j] - p[j] * q[i]).norm();
  Real pn(prec);
  Real qn(prec);
  for (int i = 0; i < 4; ++i) {
    pn += p[i].norm();
    qn += q[i].norm();
  }
  return sqrt(wedge / (pn * qn));
}

ComplexPoint to_complex(const RationalPoint& p, long precision) {
  Vector4<Complex> out;
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = Complex(p[i], precision);
  return ComplexPoint(std::move(out));
}

namespace {

Complex quad_to_complex(const QuadExt& v, long precision) {
  Real a(v.a(), precision);
  if (v.is_rational()) return Complex(a, Real(precision));
  Real b(v.b(), precision);
  Real root = sqrt(abs(Real(v.d(), precision)));
  if (v.d() > 0) return Complex(a + b * root, Real(precision));
  return Complex(a, b * root);
}

template <typename Less>
bool lex_coords(const Vector4<QuadExt>& a, const Vector4<QuadExt>& b, Less less) {
  for (int i = 0; i < 4; ++i) {
    if (less(a[i], b[i])) return true;
    if (less(b[i], a[i])) return false;
  }
  return false;
}

}  // namespace

ComplexPoint to_complex(const QuadPoint& p, long precision) {
  Vector4<Complex> out;
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = quad_to_complex(p[i], precision);
  return ComplexPoint(std::move(out));
}

QuadPoint to_quad(const RationalPoint& p) {
  return QuadPoint(Vector4<QuadExt>{QuadExt(p[0]), QuadExt(p[1]), QuadExt(p[2]), QuadExt(p[3])});
}

bool canonical_less(const QuadPoint& p, const QuadPoint& q) {
  return lex_coords(normalized(p).x, normalized(q).x,
                    [](const QuadExt& a, const QuadExt& b) { return lex_less(a, b); });
}

bool canonical_less(const ComplexPoint& p, const ComplexPoint& q) {
  ComplexPoint a = normalized(p);
  ComplexPoint b = normalized(q);
  for (int i = 0; i < 4; ++i) {
    if (a[i].re() != b[i].re()) return a[i].re() < b[i].re();
    if (a[i].im() != b[i].im()) return a[i].im() < b[i].im();
  }
  return false;
}

std::string format_point(const RationalPoint& p) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < 4; ++i) out << (i ? " : " : "") << format_rational(p[i]);
  out << ")";
  return out.str();
}

std::string format_point(const QuadPoint& p) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < 4; ++i) out << (i ? " : " : "") << format_quadext(p[i]);
  out << ")";
  return out.str();
}

std::string format_point(const ComplexPoint& p, int digits) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < 4; ++i)
    out << (i ? " : " : "") << p[i].re().to_string(digits) << (p[i].im().sign() < 0 ? "" : "+")
        << p[i].im().to_string(digits) << "i";
  out << ")";
  return out.str();
}

}  // namespace coq
