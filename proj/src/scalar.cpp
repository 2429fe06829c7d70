#include "binom/scalar.hpp"

#include <atomic>

namespace binom {

namespace {

std::atomic<RatFunReduction> g_reduction{RatFunReduction::Full};

ParamPoly monomial_poly(const ParamMonomial& m) { return ParamPoly::from_terms({{m, mpq_class(1)}}); }

}  // namespace

void set_ratfun_reduction(RatFunReduction mode) { g_reduction.store(mode); }
RatFunReduction ratfun_reduction() { return g_reduction.load(); }

RatFun::RatFun(ParamPoly num, ParamPoly den)
    : RatFun(ratfun_reduce(RatFun(std::move(num), std::move(den), Raw{}), ratfun_reduction())) {}

RatFun ratfun_reduce(const RatFun& f, RatFunReduction mode) {
  ParamPoly num = f.num();
  ParamPoly den = f.den();
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RatFun(ParamPoly{}, ParamPoly(mpq_class(1)), RatFun::Raw{});

  const ParamMonomial common = gcd(num.monomial_content(), den.monomial_content());
  if (!common.is_one()) {
    num = *num.divide_exact(monomial_poly(common));
    den = *den.divide_exact(monomial_poly(common));
  }
  if (!den.is_constant() && !num.is_constant()) {
    if (mode == RatFunReduction::Full) {
      const ParamPoly g = gcd(num, den);
      if (!g.is_constant()) {
        num = *num.divide_exact(g);
        den = *den.divide_exact(g);
      }
    } else if (auto q = num.divide_exact(den)) {
      num = std::move(*q);
      den = ParamPoly(mpq_class(1));
    } else if (auto r = den.divide_exact(num)) {
      num = ParamPoly(mpq_class(1));
      den = std::move(*r);
    }
  }
  const mpq_class lead = den.lead().second;
  if (lead != 1) {
    const mpq_class s = mpq_class(1) / lead;
    num = num.scaled(s);
    den = den.scaled(s);
  }
  return RatFun(std::move(num), std::move(den), RatFun::Raw{});
}

RatFun RatFun::canonical_scale() const {
  if (num_.is_zero()) return RatFun(ParamPoly{}, ParamPoly(mpq_class(1)), Raw{});
  const mpq_class lead = den_.lead().second;
  if (lead == 1) return *this;
  const mpq_class s = mpq_class(1) / lead;
  return RatFun(num_.scaled(s), den_.scaled(s), Raw{});
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(RatFun f) {
  if (f.is_constant())
    value_ = Rational(f.num().constant_value() / f.den().constant_value());
  else
    value_ = std::move(f);
}

Scalar Scalar::parameter(std::uint32_t index) { return Scalar(RatFun(ParamPoly::variable(index))); }

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(Rational(num, den));
}

bool Scalar::is_zero() const { return is_rational() && sgn(rational()) == 0; }
bool Scalar::is_one() const { return is_rational() && rational() == 1; }

RatFun Scalar::as_ratfun() const {
  if (is_rational()) return RatFun(ParamPoly(rational()));
  return std::get<RatFun>(value_);
}

int Scalar::rational_sign() const { return is_rational() ? sgn(rational()) : 0; }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-rational()));
  const auto& f = std::get<RatFun>(value_);
  Scalar out;
  out.value_ = RatFun(-f.num(), f.den(), RatFun::Raw{});
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(Rational(rational() + o.rational()));
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const RatFun a = as_ratfun();
  const RatFun b = o.as_ratfun();
  if (ratfun_reduction() != RatFunReduction::Full)
    return Scalar(RatFun(a.num() * b.den() + b.num() * a.den(), a.den() * b.den()));
  // Henrici: with coprime inputs only gcd(num, gcd(dens)) can cancel.
  if (a.den() == b.den()) return Scalar(RatFun(a.num() + b.num(), a.den()));
  const ParamPoly g = gcd(a.den(), b.den());
  if (g.is_constant()) {
    return Scalar(RatFun(a.num() * b.den() + b.num() * a.den(), a.den() * b.den(), RatFun::Raw{}).canonical_scale());
  }
  const ParamPoly ad = *a.den().divide_exact(g);
  const ParamPoly bd = *b.den().divide_exact(g);
  ParamPoly num = a.num() * bd + b.num() * ad;
  ParamPoly den = ad * b.den();
  if (num.is_zero()) return Scalar();
  const ParamPoly h = gcd(num, g);
  if (!h.is_constant()) {
    num = *num.divide_exact(h);
    den = *den.divide_exact(h);
  }
  return Scalar(RatFun(std::move(num), std::move(den), RatFun::Raw{}).canonical_scale());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(Rational(rational() * o.rational()));
  if (is_zero() || o.is_zero()) return Scalar();
  if (is_rational()) {
    const auto& f = std::get<RatFun>(o.value_);
    Scalar out;
    out.value_ = RatFun(f.num().scaled(rational()), f.den(), RatFun::Raw{});
    return out;
  }
  if (o.is_rational()) return o * *this;
  const RatFun& a = std::get<RatFun>(value_);
  const RatFun& b = std::get<RatFun>(o.value_);
  if (ratfun_reduction() != RatFunReduction::Full) return Scalar(RatFun(a.num() * b.num(), a.den() * b.den()));
  // Cross-cancel so the product of coprime pairs stays coprime.
  ParamPoly an = a.num(), ad = a.den(), bn = b.num(), bd = b.den();
  if (const ParamPoly g = gcd(an, bd); !g.is_constant()) {
    an = *an.divide_exact(g);
    bd = *bd.divide_exact(g);
  }
  if (const ParamPoly g = gcd(bn, ad); !g.is_constant()) {
    bn = *bn.divide_exact(g);
    ad = *ad.divide_exact(g);
  }
  return Scalar(RatFun(an * bn, ad * bd, RatFun::Raw{}).canonical_scale());
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Scalar(Rational(1 / rational()));
  const auto& f = std::get<RatFun>(value_);
  return Scalar(RatFun(f.den(), f.num()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

std::optional<Scalar> Scalar::try_div(const Scalar& o) const {
  if (o.is_zero()) return std::nullopt;
  return *this / o;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;  // constants are always stored as Rational
  if (a.is_rational()) return a.rational() == b.rational();
  const auto& x = std::get<RatFun>(a.value_);
  const auto& y = std::get<RatFun>(b.value_);
  if (x == y) return true;
  if (ratfun_reduction() == RatFunReduction::Full) return false;
  return x.num() * y.den() == y.num() * x.den();
}

bool Scalar::needs_parens() const {
  if (is_rational()) return false;
  const auto& f = std::get<RatFun>(value_);
  return f.den().is_constant() && f.num().terms().size() > 1;
}

std::string Scalar::to_string(const std::vector<std::string>& names) const {
  if (is_rational()) return rational().get_str();
  const auto& f = std::get<RatFun>(value_);
  std::string num = f.num().to_string(names);
  if (f.den().is_constant() && f.den().constant_value() == 1) return num;
  if (f.num().terms().size() > 1) num = "(" + num + ")";
  std::string den = f.den().to_string(names);
  const bool bare_den = f.den().is_monomial() && f.den().lead().second == 1 &&
                        f.den().lead().first.factors().size() == 1 &&
                        f.den().lead().first.factors().front().second == 1;
  if (!bare_den) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace binom
