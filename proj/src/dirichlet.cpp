#include "zetafast/dirichlet.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace zetafast {

namespace {

long long power_mod(long long base, long long exp, long long mod) {
  long long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int primitive_root_mod_prime(int p) {
  if (p == 2) return 1;
  const auto factors = factorize(p - 1);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [f, e] : factors) {
      if (power_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

// One cyclic factor of (Z/qZ)^*, living in the prime power `modulus`.
struct Generator {
  int modulus;
  int order;
  std::vector<int> log;  // exponent of this generator for each residue, -1 off units
};

std::vector<Generator> unit_group_generators(int q) {
  std::vector<Generator> gens;
  for (const auto& [p, e] : factorize(q)) {
    int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 1) continue;
      if (e == 2) {
        gens.push_back({4, 2, {-1, 0, -1, 1}});
        continue;
      }
      // (Z/2^e)^* = <-1> x <5>
      const int order5 = pe / 4;
      std::vector<int> log5(pe, -1);
      long long x = 1;
      for (int k = 0; k < order5; ++k) {
        log5[x] = k;
        x = x * 5 % pe;
      }
      Generator sign{pe, 2, std::vector<int>(pe, -1)};
      Generator five{pe, order5, std::vector<int>(pe, -1)};
      for (int r = 1; r < pe; r += 2) {
        if (log5[r] >= 0) {
          sign.log[r] = 0;
          five.log[r] = log5[r];
        } else {
          sign.log[r] = 1;
          five.log[r] = log5[pe - r];
        }
      }
      gens.push_back(std::move(sign));
      gens.push_back(std::move(five));
      continue;
    }
    long long g = primitive_root_mod_prime(p);
    if (e >= 2 && power_mod(g, p - 1, static_cast<long long>(p) * p) == 1) g += p;
    const int order = pe / p * (p - 1);
    Generator gen{pe, order, std::vector<int>(pe, -1)};
    long long x = 1;
    for (int k = 0; k < order; ++k) {
      gen.log[x] = k;
      x = x * g % pe;
    }
    gens.push_back(std::move(gen));
  }
  return gens;
}

int lcm_of(const std::vector<int>& values) {
  int l = 1;
  for (int v : values) l = std::lcm(l, v);
  return l;
}

DirichletCharacter build(int q, int index, const std::vector<Generator>& gens) {
  std::vector<int> orders;
  for (const auto& g : gens) orders.push_back(g.order);
  std::vector<int> exps(gens.size(), 0);
  int rest = index;
  for (std::size_t i = gens.size(); i-- > 0;) {
    exps[i] = rest % orders[i];
    rest /= orders[i];
  }
  const int period = lcm_of(orders);
  std::vector<int> phases(q, -1);
  for (int n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    long long ph = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int lg = gens[i].log[n % gens[i].modulus];
      ph += static_cast<long long>(exps[i]) * lg * (period / orders[i]);
    }
    phases[n] = static_cast<int>(ph % period);
  }
  return DirichletCharacter(q, index, std::move(orders), std::move(exps), period,
                            std::move(phases));
}

}  // namespace

DirichletCharacter::DirichletCharacter(int modulus, int index, std::vector<int> generator_orders,
                                       std::vector<int> exponents, int period,
                                       std::vector<int> phases)
    : modulus_(modulus),
      index_(index),
      orders_(std::move(generator_orders)),
      exponents_(std::move(exponents)),
      period_(period),
      phases_(std::move(phases)) {
  values_.reserve(phases_.size());
  for (std::size_t n = 0; n < phases_.size(); ++n) {
    values_.push_back(value_as<ComplexValue>(static_cast<long long>(n)));
  }
  principal_ = std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
  real_ = std::all_of(phases_.begin(), phases_.end(),
                      [&](int ph) { return ph < 0 || (2 * ph) % period_ == 0; });
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    order_ = std::lcm(order_, orders_[i] / std::gcd(orders_[i], exponents_[i]));
  }

  // Induced from q/p iff chi is trivial on the units congruent to 1 mod q/p.
  primitive_ = true;
  for (const auto& [p, e] : factorize(modulus_)) {
    const int d = modulus_ / p;
    bool induced = true;
    for (int k = 0; k < p && induced; ++k) {
      const int n = (1 + k * d) % modulus_;
      if (std::gcd(n, modulus_) != 1) continue;
      if (phases_[n] != 0) induced = false;
    }
    if (induced) {
      primitive_ = false;
      break;
    }
  }
}

int DirichletCharacter::phase(long long n) const { return phases_[reduce(n)]; }

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<int> exps(exponents_.size());
  int index = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    exps[i] = (orders_[i] - exponents_[i]) % orders_[i];
    index = index * orders_[i] + exps[i];
  }
  std::vector<int> phases(phases_.size());
  for (std::size_t n = 0; n < phases_.size(); ++n) {
    phases[n] = phases_[n] < 0 ? -1 : (period_ - phases_[n]) % period_;
  }
  return DirichletCharacter(modulus_, index, orders_, std::move(exps), period_, std::move(phases));
}

std::vector<DirichletCharacter> characters_mod(int q) {
  if (q < 2 || q > 10000) {
    throw CharacterError("unsupported modulus " + std::to_string(q) + " (need 2 <= q <= 10000)");
  }
  const auto gens = unit_group_generators(q);
  int count = 1;
  for (const auto& g : gens) count *= g.order;
  std::vector<DirichletCharacter> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(build(q, i, gens));
  return out;
}

DirichletCharacter character(int q, int index) {
  if (q < 2 || q > 10000) {
    throw CharacterError("unsupported modulus " + std::to_string(q) + " (need 2 <= q <= 10000)");
  }
  const auto gens = unit_group_generators(q);
  int count = 1;
  for (const auto& g : gens) count *= g.order;
  if (index < 0 || index >= count) {
    throw CharacterError("character index " + std::to_string(index) + " out of range for q = " +
                         std::to_string(q));
  }
  return build(q, index, gens);
}

ComplexValue gauss_sum(const DirichletCharacter& chi) { return gauss_sum_as<ComplexValue>(chi); }

namespace {

struct LAttempt {
  ComplexValue value;
  ComplexValue refined;
  std::int64_t summands = 0;
  double max_magnitude = 0.0;
  double roundoff = 0.0;
};

template <class Real>
LAttempt run_l(ComplexValue s, const DirichletCharacter& chi, const EvalParams& p, int m_terms) {
  using Complex = complex_t<Real>;
  const Complex sc = detail::from_value<Complex>(s);
  const auto base = l_series(sc, chi, p, p.d_terms(), m_terms);
  const auto refined = l_series(sc, chi, p, 2 * p.d_terms(), 2 * m_terms);
  LAttempt a;
  a.value = detail::to_value(base.value[0]);
  a.refined = detail::to_value(refined.value[0]);
  a.summands = base.terms;
  a.max_magnitude = base.max_magnitude;
  const double eps = static_cast<double>(std::numeric_limits<Real>::epsilon());
  a.roundoff = roundoff_estimate(eps, refined.max_magnitude, refined.conditioned_sq);
  return a;
}

}  // namespace

EvalResult l_function(ComplexValue s, const DirichletCharacter& chi, double delta,
                      PrecisionPolicy precision) {
  if (chi.is_principal()) {
    throw CharacterError("L-function evaluation needs a non-principal character");
  }
  if (!chi.is_primitive()) {
    throw CharacterError("L-function evaluation needs a primitive character");
  }
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("argument must be finite");
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidAccuracy("delta must be a positive finite number");
  }

  EvalParams p = derive_params(s.real(), std::abs(s.imag()), delta, Mode::heuristic);
  if (s.real() + 1.0 >= p.v) {
    p.v = static_cast<int>(std::floor(s.real())) + 2;
    p.N = kSmoothingConstant * std::sqrt(1.0 + (0.5 + std::abs(s.imag())) / p.v);
    p.M = static_cast<int>(std::ceil(p.N));
  }
  p.certified = false;
  const int m_terms = static_cast<int>(std::ceil(chi.modulus() * p.N));

  LAttempt attempt;
  Backend backend = Backend::hardware;
  if (precision == PrecisionPolicy::extended) {
    attempt = run_l<Extended>(s, chi, p, m_terms);
    backend = Backend::extended;
  } else {
    attempt = run_l<double>(s, chi, p, m_terms);
    if (precision == PrecisionPolicy::automatic && !(attempt.roundoff <= delta)) {
      attempt = run_l<Extended>(s, chi, p, m_terms);
      backend = Backend::extended;
    }
  }
  if (!std::isfinite(attempt.value.real()) || !std::isfinite(attempt.value.imag())) {
    throw PrecisionExhausted("evaluation overflowed the working range");
  }

  EvalResult r;
  r.value = attempt.value;
  r.error_bound = std::abs(attempt.value - attempt.refined) + attempt.roundoff;
  r.summands_used = attempt.summands;
  r.certified = false;
  r.max_cancellation_ratio = attempt.max_magnitude / std::max(std::abs(attempt.value), 1.0);
  r.roundoff_estimate = attempt.roundoff;
  r.backend = backend;
  r.params = p;
  r.params.M = m_terms;
  return r;
}

}  // namespace zetafast
