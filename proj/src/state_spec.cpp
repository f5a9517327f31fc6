#include "skewent/state_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

#include "skewent/format.hpp"
#include "skewent/states.hpp"

namespace skewent {

namespace {

constexpr double kWeightSumTol = 1e-12;

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
  }

  StateSpec parse() {
    StateSpec spec = node();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("state spec: " + what + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return src_.substr(start, pos_ - start);
  }

  std::string value() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] != ',' && src_[pos_] != ')' && src_[pos_] != '(' &&
           src_[pos_] != ':' && src_[pos_] != '=')
      ++pos_;
    if (start == pos_) fail("expected a value");
    return src_.substr(start, pos_ - start);
  }

  double weight() {
    const std::string text = value();
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
    if (ec != std::errc{} || ptr != text.data() + text.size()) fail("malformed weight '" + text + "'");
    return w;
  }

  StateSpec node() {
    StateSpec spec;
    spec.name = identifier();
    expect('(');
    if (spec.is_mix()) {
      do {
        const double w = weight();
        expect(':');
        spec.parts.emplace_back(w, node());
      } while (peek(',') && (++pos_, true));
    } else if (!peek(')')) {
      do {
        std::string key = identifier();
        expect('=');
        spec.args.emplace_back(std::move(key), value());
      } while (peek(',') && (++pos_, true));
    }
    expect(')');
    return spec;
  }

  std::string src_;
  std::size_t pos_ = 0;
};

class Args {
 public:
  explicit Args(const StateSpec& spec) : name_(spec.name) {
    for (const auto& [k, v] : spec.args)
      if (!values_.emplace(k, v).second) throw ParseError(name_ + ": repeated argument '" + k + "'");
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string text(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) throw ParseError(name_ + ": missing argument '" + key + "'");
    used_.push_back(key);
    return it->second;
  }

  long long integer(const std::string& key) {
    const std::string t = text(key);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
      throw ParseError(name_ + ": argument '" + key + "' is not an integer");
    return v;
  }

  std::size_t count(const std::string& key) {
    const long long v = integer(key);
    if (v < 0) throw ParseError(name_ + ": argument '" + key + "' must be non-negative");
    return static_cast<std::size_t>(v);
  }

  /// dims=2x3x2, or N (and optional d, default 2).
  Dims dims() {
    if (has("dims")) {
      Dims out;
      const std::string t = text("dims");
      std::size_t start = 0;
      while (start <= t.size()) {
        const std::size_t end = std::min(t.find('x', start), t.size());
        const std::string part = t.substr(start, end - start);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
          throw ParseError(name_ + ": malformed dims '" + t + "'");
        out.push_back(v);
        start = end + 1;
      }
      return out;
    }
    const std::size_t n = count("N");
    const std::size_t d = has("d") ? count("d") : 2;
    return Dims(n, d);
  }

  void finish() const {
    for (const auto& [k, v] : values_)
      if (std::find(used_.begin(), used_.end(), k) == used_.end())
        throw ParseError(name_ + ": unknown argument '" + k + "'");
  }

 private:
  std::string name_;
  std::map<std::string, std::string> values_;
  std::vector<std::string> used_;
};

QuantumState evaluate_leaf(const StateSpec& spec) {
  Args a(spec);
  const std::string& n = spec.name;
  auto done = [&](QuantumState s) {
    a.finish();
    return s;
  };
  if (n == "dicke") {
    const auto qubits = a.count("N");
    return done(dicke(qubits, a.count("m")));
  }
  if (n == "ghz") return done(ghz(a.count("N")));
  if (n == "ghzphase") return done(ghz_phase(a.count("N")));
  if (n == "white") return done(white_noise(a.dims()));
  if (n == "product") {
    const std::string kets = a.text("kets");
    const Dims dims = a.has("dims") ? a.dims() : Dims(kets.size(), 2);
    return done(product_state(dims, kets));
  }
  if (n == "kseparable" || n == "kproducible") {
    const Dims dims = a.dims();
    const int k = static_cast<int>(a.integer("k"));
    const int terms = a.has("terms") ? static_cast<int>(a.integer("terms")) : 1;
    const auto seed = a.has("seed") ? static_cast<std::uint64_t>(a.integer("seed")) : 0u;
    return done(n == "kseparable" ? random_k_separable(dims.size(), dims, k, terms, seed)
                                  : random_k_producible(dims.size(), dims, k, terms, seed));
  }
  throw ParseError("state spec: unknown state '" + n + "'");
}

}  // namespace

std::string StateSpec::to_string() const {
  std::string out = name + "(";
  if (is_mix()) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ", ";
      out += format_sig(parts[i].first) + ": " + parts[i].second.to_string();
    }
  } else {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += args[i].first + "=" + args[i].second;
    }
  }
  return out + ")";
}

StateSpec parse_state_spec(const std::string& text) { return Parser(text).parse(); }

QuantumState noisy_mix(const std::vector<double>& weights, const std::vector<QuantumState>& states) {
  if (weights.size() != states.size() || states.empty())
    throw DimensionError("mix: weights and states differ in count");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw DomainError("mix: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightSumTol)
    throw DomainError("mix: weights sum to " + format_sig(total) + ", not 1");
  std::vector<Operator> rhos;
  for (const auto& s : states) {
    if (s.dims() != states.front().dims()) throw DimensionError("mix: components have different dims");
    rhos.push_back(s.rho());
  }
  return QuantumState::from_density(states.front().dims(), convex_sum(weights, rhos));
}

QuantumState noisy_mix(const StateSpec& spec) {
  if (!spec.is_mix()) return evaluate_leaf(spec);
  std::vector<double> weights;
  std::vector<QuantumState> states;
  for (const auto& [w, part] : spec.parts) {
    weights.push_back(w);
    states.push_back(noisy_mix(part));
  }
  return noisy_mix(weights, states);
}

QuantumState evaluate(const StateSpec& spec) { return noisy_mix(spec); }

}  // namespace skewent
