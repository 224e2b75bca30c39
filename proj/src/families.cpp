#include "quasidisc/families.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "quasidisc/errors.hpp"

namespace quasidisc {

namespace {

std::string idx(long n) { return std::to_string(n); }

void require_index(long n, long first) {
  if (n < first) throw std::out_of_range("sequence index " + idx(n) + " < " + idx(first));
}

}  // namespace

CoefficientProvider CoefficientProvider::constant(const Rational& value) {
  return CoefficientProvider([value](long) { return value; });
}

CoefficientProvider CoefficientProvider::table(std::vector<Rational> values, long first_index) {
  return CoefficientProvider([values = std::move(values), first_index](long n) -> Rational {
    if (n < first_index || n - first_index >= static_cast<long>(values.size())) {
      throw InvalidParamsError("coefficient table has no entry for n = " + idx(n));
    }
    return values[static_cast<std::size_t>(n - first_index)];
  });
}

CoefficientProvider CoefficientProvider::formula(Formula fn) { return CoefficientProvider(std::move(fn)); }

Polynomial PolynomialSequence::operator()(long n) const {
  std::vector<Rational> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) coeffs.push_back(c(n));
  return Polynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------

const Polynomial& SchurFamily::at(long n) {
  require_index(n, 0);
  while (static_cast<long>(cache_.size()) <= n) {
    const long u = static_cast<long>(cache_.size());
    if (u == 0) {
      cache_.emplace_back(1);
      continue;
    }
    const Rational a = params_.a(u);
    if (a == 0) throw InvalidParamsError("Schur: a_" + idx(u) + " = 0");
    const Polynomial linear{params_.b(u), a};
    if (u == 1) {
      cache_.push_back(linear);
      continue;
    }
    const Rational c = params_.c(u);
    if (c == 0) throw InvalidParamsError("Schur: c_" + idx(u) + " = 0");
    cache_.push_back(linear * cache_[u - 1] - cache_[u - 2] * c);
  }
  return cache_[n];
}

Polynomial gen_schur(const SchurParams& params, long n) { return SchurFamily(params).at(n); }

// ---------------------------------------------------------------------------

void validate(const UlasParams& params) {
  const auto& [i, j, k, l] = params.shape;
  if (i > j) throw InvalidParamsError("Ulas: need i <= j");
  if (params.regime == Regime::Strict) {
    if (k < l) throw InvalidParamsError("Ulas: strict regime needs k >= l");
  } else {
    if (i + l > j + k) throw InvalidParamsError("Ulas: relaxed regime needs i + l <= j + k");
    if (l > 2 * k) throw InvalidParamsError("Ulas: relaxed regime needs l <= 2k");
  }
  if (params.r0.degree() != Degree(i)) throw InvalidParamsError("Ulas: deg r_0 must equal i");
  if (params.r1.degree() != Degree(j)) throw InvalidParamsError("Ulas: deg r_1 must equal j");
  if (params.f.empty() || params.f.nominal_degree() != k) {
    throw InvalidParamsError("Ulas: f_n needs exactly k+1 coefficients");
  }
  const Rational a2k = params.f.coefficient(k)(2);
  if (a2k == 0) throw InvalidParamsError("Ulas: a_{2,k} = 0");
  if (a2k * params.r1.leading() - params.v(2) * params.r0.leading() == 0) {
    throw InvalidParamsError("Ulas: a_{2,k} q_j - v_2 p_i = 0");
  }
}

UlasFamily::UlasFamily(UlasParams params) : params_(std::move(params)) {
  validate(params_);
  cache_.push_back(params_.r0);
  cache_.push_back(params_.r1);
}

std::size_t UlasFamily::predicted_degree(long n) const {
  require_index(n, 0);
  if (n == 0) return params_.shape.i;
  return static_cast<std::size_t>(n - 1) * params_.shape.k + params_.shape.j;
}

const Polynomial& UlasFamily::at(long n) {
  require_index(n, 0);
  const auto& shape = params_.shape;
  while (static_cast<long>(cache_.size()) <= n) {
    const long u = static_cast<long>(cache_.size());
    const Polynomial fu = params_.f(u);
    if (fu.degree() != Degree(shape.k)) {
      throw InvalidParamsError("Ulas: a_{" + idx(u) + ",k} = 0");
    }
    Polynomial next = fu * cache_[u - 1] - (cache_[u - 2] * params_.v(u)).shifted(shape.l);
    if (next.degree() != Degree(predicted_degree(u))) {
      throw DegreeDroppedError("Ulas: leading coefficient of r_" + idx(u) + " vanished");
    }
    cache_.push_back(std::move(next));
  }
  return cache_[n];
}

Polynomial gen_ulas(const UlasParams& params, long n) { return UlasFamily(params).at(n); }

// ---------------------------------------------------------------------------

void validate(const TurajParams& params) {
  if (params.d < 1) throw InvalidParamsError("Turaj: need d >= 1");
  if (params.m == 0) throw InvalidParamsError("Turaj: need m != 0");
  if (params.k < params.l) throw InvalidParamsError("Turaj: need k >= l");
  if (params.initial.size() != params.d + 1) {
    throw InvalidParamsError("Turaj: need d+1 initial polynomials");
  }
  for (std::size_t s = 0; s <= params.d; ++s) {
    if (params.initial[s].is_zero()) throw InvalidParamsError("Turaj: zero initial polynomial");
    if (s > 0 && *params.initial[s].degree() < *params.initial[s - 1].degree()) {
      throw InvalidParamsError("Turaj: initial degrees must be nondecreasing");
    }
  }
  if (params.g.empty() || params.g.nominal_degree() != params.k) {
    throw InvalidParamsError("Turaj: g_n needs exactly k+1 coefficients");
  }
  for (const auto& term : params.middle) {
    if (term.alpha.size() != params.d + 1) {
      throw InvalidParamsError("Turaj: middle-term multi-index needs d+1 entries");
    }
    if (std::accumulate(term.alpha.begin(), term.alpha.end(), 0U) >= params.m) {
      throw InvalidParamsError("Turaj: middle-term multi-index needs |alpha| < m");
    }
  }
  const auto& rd = params.initial[params.d];
  const auto& rd1 = params.initial[params.d - 1];
  if (rd.degree() == rd1.degree() && params.k == params.l) {
    const long n = static_cast<long>(params.d) + 1;
    const Rational lead = params.g.coefficient(params.k)(n) * pow(rd.leading(), static_cast<long>(params.m)) +
                          params.v(n) * pow(rd1.leading(), static_cast<long>(params.m));
    if (lead == 0) {
      throw InvalidParamsError("Turaj: a_{k,d+1} p_{i_d,d}^m + v_{d+1} p_{i_{d-1},d-1}^m = 0");
    }
  }
}

TurajFamily::TurajFamily(TurajParams params) : params_(std::move(params)) {
  validate(params_);
  cache_.assign(params_.initial.begin(), params_.initial.end());
}

const Polynomial& TurajFamily::at(long n) {
  require_index(n, 0);
  const auto& p = params_;
  while (static_cast<long>(cache_.size()) <= n) {
    const long u = static_cast<long>(cache_.size());
    const Polynomial gu = p.g(u);
    if (gu.degree() != Degree(p.k)) throw InvalidParamsError("Turaj: a_{k," + idx(u) + "} = 0");
    const Polynomial& prev = cache_[u - 1];
    Polynomial next = gu * prev.pow(p.m) + (cache_[u - 2].pow(p.m) * p.v(u)).shifted(p.l);
    for (const auto& term : p.middle) {
      const Polynomial t = term.t(u);
      if (t.constant() != 0) throw InvalidParamsError("Turaj: middle term with t(0) != 0");
      if (!t.is_zero() && *t.degree() >= p.k) {
        throw InvalidParamsError("Turaj: middle term with deg t >= k");
      }
      if (t.is_zero()) continue;
      Polynomial product = t * prev;
      for (std::size_t s = 0; s < term.alpha.size(); ++s) {
        if (term.alpha[s] != 0) product *= cache_[u - 1 - static_cast<long>(s)].pow(term.alpha[s]);
      }
      next += product;
    }
    const Integer expected = predicted_degree_turaj(p, u);
    if (next.is_zero() || Integer(static_cast<unsigned long>(*next.degree())) != expected) {
      throw DegreeDroppedError("Turaj: leading coefficient of r_" + idx(u) + " vanished");
    }
    cache_.push_back(std::move(next));
  }
  return cache_[n];
}

Polynomial gen_turaj(const TurajParams& params, long n) { return TurajFamily(params).at(n); }

Integer predicted_degree_turaj(const TurajParams& params, long n) {
  require_index(n, 0);
  const long d = static_cast<long>(params.d);
  if (n <= d) {
    return Integer(static_cast<unsigned long>(params.initial.at(static_cast<std::size_t>(n)).checked_degree()));
  }
  Integer geometric = 0;
  Integer power = 1;
  for (long s = 0; s <= n - d - 1; ++s) {
    geometric += power;
    power *= params.m;
  }
  // power == m^{n-d} here
  const auto id = static_cast<unsigned long>(params.initial[params.d].checked_degree());
  return Integer(static_cast<unsigned long>(params.k)) * geometric + Integer(id) * power;
}

LeadConst predicted_lead_const_turaj(const TurajParams& params, long n) {
  const long d = static_cast<long>(params.d);
  if (n < d) throw std::out_of_range("predicted L_n, C_n need n >= d");
  const auto& rd = params.initial[params.d];
  const auto& rd1 = params.initial[params.d - 1];
  const Integer m = params.m;
  auto m_pow = [&](long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
  };
  auto a = [&](std::size_t s, long u) { return params.g.coefficient(s)(u); };

  LeadConst out;
  if (n == d) {
    out.leading = rd.leading();
  } else if (rd.degree() == rd1.degree() && params.k == params.l) {
    const Rational first = a(params.k, d + 1) * pow(rd.leading(), static_cast<long>(params.m)) +
                           params.v(d + 1) * pow(rd1.leading(), static_cast<long>(params.m));
    out.leading = pow(first, m_pow(n - d - 1));
    for (long s = 2; s <= n - d; ++s) out.leading *= pow(a(params.k, d + s), m_pow(n - d - s));
  } else {
    out.leading = pow(rd.leading(), m_pow(n - d));
    for (long s = 1; s <= n - d; ++s) out.leading *= pow(a(params.k, d + s), m_pow(n - d - s));
  }

  if (params.l == 0) {
    out.constant = 1;
  } else {
    out.constant = pow(rd.constant(), m_pow(n - d));
    for (long s = 1; s <= n - d; ++s) out.constant *= pow(a(0, d + s), m_pow(n - d - s));
  }
  return out;
}

Polynomial gen_quasi(Sequence& family, long n, const Rational& c) {
  if (n < 1) throw std::out_of_range("quasi polynomial needs n >= 1");
  Polynomial out = family.at(n);
  out += family.at(n - 1) * c;
  return out;
}

}  // namespace quasidisc
