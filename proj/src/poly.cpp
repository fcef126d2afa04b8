#include "sasver/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace sasver::alg {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool valid_var_name(const std::string& n) {
  if (n == "c" || n == "a" || n == "alpha" || n == "Vol" || n == "IA" || n == "IV" ||
      n == "Vsq")
    return true;
  if (n.size() >= 2 &&
      (n[0] == 's' || n[0] == 'x' || n[0] == 'y' || n[0] == 'z' || n[0] == 'w')) {
    std::string rest = n.substr(1);
    if (n[0] == 's') {
      auto us = rest.find('_');
      if (us != std::string::npos)
        return all_digits(rest.substr(0, us)) && all_digits(rest.substr(us + 1));
    }
    return all_digits(rest);
  }
  return false;
}

// Index of each element of `from` inside `to` (every element must be present).
std::vector<std::size_t> index_map(const std::vector<std::string>& from,
                                   const std::vector<std::string>& to) {
  std::vector<std::size_t> idx(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = std::lower_bound(to.begin(), to.end(), from[i]);
    idx[i] = static_cast<std::size_t>(it - to.begin());
  }
  return idx;
}

}  // namespace

Poly Poly::constant(Rational c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(Exponents{}, std::move(c));
  return p;
}

Poly Poly::var(const std::string& name) {
  if (!valid_var_name(name))
    throw std::invalid_argument("Poly: unknown symbol '" + name + "'");
  Poly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && vars_.empty());
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("Poly: not a constant: " + str());
  return terms_.begin()->second;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly p(*this);
  for (auto& [e, coef] : p.terms_) coef *= c;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<std::string> vars;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(vars));
  auto ia = index_map(a.vars_, vars);
  auto ib = index_map(b.vars_, vars);
  std::map<Poly::Exponents, Rational> terms;
  auto accumulate = [&](const Poly& p, const std::vector<std::size_t>& ix) {
    for (const auto& [e, c] : p.terms_) {
      Poly::Exponents key(vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) key[ix[i]] = e[i];
      auto [it, inserted] = terms.emplace(std::move(key), c);
      if (!inserted) it->second += c;
    }
  };
  accumulate(a, ia);
  accumulate(b, ib);
  Poly r(std::move(vars), std::move(terms));
  r.prune();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<std::string> vars;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(vars));
  auto ia = index_map(a.vars_, vars);
  auto ib = index_map(b.vars_, vars);
  std::map<Poly::Exponents, Rational> terms;
  for (const auto& [ea, ca] : a.terms_) {
    Poly::Exponents base(vars.size(), 0);
    for (std::size_t i = 0; i < ea.size(); ++i) base[ia[i]] = ea[i];
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents key = base;
      for (std::size_t i = 0; i < eb.size(); ++i) key[ib[i]] += eb[i];
      Rational prod = ca * cb;
      auto [it, inserted] = terms.emplace(std::move(key), std::move(prod));
      if (!inserted) it->second += ca * cb;
    }
  }
  Poly r(std::move(vars), std::move(terms));
  r.prune();
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(1);
  Poly base(*this);
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

void Poly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) vars.push_back(vars_[i]);
  std::map<Exponents, Rational> terms;
  for (auto& [e, c] : terms_) {
    Exponents key;
    key.reserve(vars.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) key.push_back(e[i]);
    terms.emplace(std::move(key), std::move(c));
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

Rational Poly::eval(const std::map<std::string, Rational>& binding) const {
  std::vector<const Rational*> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = binding.find(vars_[i]);
    if (it == binding.end())
      throw std::invalid_argument("Poly: unbound variable '" + vars_[i] + "'");
    vals[i] = &it->second;
  }
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= vals[i]->pow(e[i]);
    sum += t;
  }
  return sum;
}

double Poly::eval_double(const std::map<std::string, double>& binding) const {
  std::vector<double> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = binding.find(vars_[i]);
    if (it == binding.end())
      throw std::invalid_argument("Poly: unbound variable '" + vars_[i] + "'");
    vals[i] = it->second;
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= vals[i];
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(const std::string& name, const Poly& replacement) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return *this;
  std::size_t vi = static_cast<std::size_t>(it - vars_.begin());
  Poly result;
  for (const auto& [e, c] : terms_) {
    Poly rest;
    rest.vars_ = vars_;
    Exponents key = e;
    unsigned deg = key[vi];
    key[vi] = 0;
    rest.terms_.emplace(std::move(key), c);
    rest.prune();
    result += deg == 0 ? rest : rest * replacement.pow(deg);
  }
  return result;
}

Poly Poly::divided_by_exact(const Poly& den) const {
  if (den.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  if (is_zero()) return Poly();
  std::vector<std::string> vars;
  std::set_union(vars_.begin(), vars_.end(), den.vars_.begin(), den.vars_.end(),
                 std::back_inserter(vars));
  auto remap = [&](const Poly& p) {
    auto ix = index_map(p.vars_, vars);
    std::map<Exponents, Rational> terms;
    for (const auto& [e, c] : p.terms_) {
      Exponents key(vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) key[ix[i]] = e[i];
      terms.emplace(std::move(key), c);
    }
    return terms;
  };

  std::map<Exponents, Rational> rem = remap(*this);
  const std::map<Exponents, Rational> divisor = remap(den);
  const Exponents& lead_e = divisor.rbegin()->first;   // lex-leading monomial
  const Rational& lead_c = divisor.rbegin()->second;

  std::map<Exponents, Rational> quot;
  while (!rem.empty()) {
    const Exponents re = rem.rbegin()->first;
    const Rational rc = rem.rbegin()->second;
    Exponents t(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < lead_e[i]) throw std::domain_error("Poly: division not exact");
      t[i] = re[i] - lead_e[i];
    }
    const Rational tc = rc / lead_c;
    quot.emplace(t, tc);
    for (const auto& [e, c] : divisor) {
      Exponents key(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) key[i] = t[i] + e[i];
      auto [it, inserted] = rem.emplace(std::move(key), Rational(0));
      it->second -= tc * c;
      if (it->second.is_zero()) rem.erase(it);
    }
  }
  Poly result(std::move(vars), std::move(quot));
  result.prune();
  return result;
}

Poly Poly::derivative(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return Poly();
  std::size_t vi = static_cast<std::size_t>(it - vars_.begin());
  Poly result;
  result.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[vi] == 0) continue;
    Exponents key = e;
    key[vi] -= 1;
    result.terms_.emplace(std::move(key), c * Rational(e[vi]));
  }
  result.prune();
  return result;
}

unsigned Poly::total_degree() const {
  unsigned deg = 0;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0u));
  return deg;
}

Rational Poly::coefficient(const std::map<std::string, unsigned>& monomial) const {
  for (const auto& [name, e] : monomial)
    if (e > 0 && !std::binary_search(vars_.begin(), vars_.end(), name)) return Rational(0);
  Exponents key(vars_.size(), 0);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = monomial.find(vars_[i]);
    if (it != monomial.end()) key[i] = it->second;
  }
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  struct Term {
    unsigned deg;
    const Exponents* e;
    const Rational* c;
  };
  std::vector<Term> order;
  order.reserve(terms_.size());
  for (const auto& [e, c] : terms_)
    order.push_back({std::accumulate(e.begin(), e.end(), 0u), &e, &c});
  std::stable_sort(order.begin(), order.end(), [](const Term& a, const Term& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    return *a.e > *b.e;
  });
  std::string out;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const Rational& c = *order[t].c;
    const Exponents& e = *order[t].e;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = c.abs();
    std::string body;
    if (mono.empty())
      body = mag.str();
    else if (mag.is_one())
      body = mono;
    else
      body = mag.str() + "*" + mono;
    if (t == 0)
      out += (c.sign() < 0 ? "-" : "") + body;
    else
      out += (c.sign() < 0 ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace sasver::alg
