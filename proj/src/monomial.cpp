#include "d4fs/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace d4fs {

std::string_view color_token(Color c) noexcept {
  switch (c) {
    case Color::c2: return "2";
    case Color::c3: return "3";
    case Color::c4: return "4";
    case Color::c4b: return "4_";
    case Color::c3b: return "3_";
    case Color::c2b: return "2_";
  }
  return "?";
}

bool FrequencyProfile::empty() const noexcept {
  for (std::size_t i = 0; i < kNumColors; ++i)
    if (a[i] != 0 || b[i] != 0) return false;
  return true;
}

namespace {

std::vector<Run> canonical_runs(std::vector<Variable> vars) {
  std::sort(vars.begin(), vars.end());
  std::vector<Run> runs;
  for (const Variable& v : vars) {
    if (!runs.empty() && runs.back().var == v)
      ++runs.back().multiplicity;
    else
      runs.push_back({v, 1});
  }
  return runs;
}

}  // namespace

Monomial::Monomial(std::vector<Variable> vars) : runs_(canonical_runs(std::move(vars))) {
  for (const Run& r : runs_) length_ += r.multiplicity;
}

Monomial::Monomial(std::initializer_list<Variable> vars) : Monomial(std::vector<Variable>(vars)) {}

Monomial Monomial::from_runs(std::vector<Run> runs) {
  std::erase_if(runs, [](const Run& r) { return r.multiplicity == 0; });
  if (std::any_of(runs.begin(), runs.end(), [](const Run& r) { return r.multiplicity < 0; }))
    throw std::invalid_argument("negative multiplicity");
  std::sort(runs.begin(), runs.end(), [](const Run& x, const Run& y) { return x.var < y.var; });
  Monomial m;
  for (const Run& r : runs) {
    if (!m.runs_.empty() && m.runs_.back().var == r.var)
      m.runs_.back().multiplicity += r.multiplicity;
    else
      m.runs_.push_back(r);
    m.length_ += r.multiplicity;
  }
  return m;
}

long long Monomial::degree_sum() const noexcept {
  long long s = 0;
  for (const Run& r : runs_) s += static_cast<long long>(r.var.degree) * r.multiplicity;
  return s;
}

int Monomial::multiplicity(Variable v) const noexcept {
  auto it = std::lower_bound(runs_.begin(), runs_.end(), v,
                             [](const Run& r, const Variable& x) { return r.var < x; });
  return (it != runs_.end() && it->var == v) ? it->multiplicity : 0;
}

ColorCounts Monomial::counts_at(int degree) const noexcept {
  ColorCounts c{};
  for (const Run& r : runs_)
    if (r.var.degree == degree) c[index(r.var.color)] += r.multiplicity;
  return c;
}

std::vector<Variable> Monomial::variables() const {
  std::vector<Variable> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (const Run& r : runs_) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.var);
  return out;
}

bool Monomial::contains(const Monomial& sub) const noexcept {
  for (const Run& r : sub.runs_)
    if (multiplicity(r.var) < r.multiplicity) return false;
  return true;
}

std::strong_ordering compare(const Monomial& m1, const Monomial& m2) noexcept {
  const auto& r1 = m1.runs();
  const auto& r2 = m2.runs();
  auto i = r1.size();
  auto j = r2.size();
  while (i > 0 && j > 0) {
    const Run& x = r1[i - 1];
    const Run& y = r2[j - 1];
    if (auto c = x.var <=> y.var; c != 0) return c;
    // Same variable on top: the side with more copies keeps it one position longer.
    if (x.multiplicity != y.multiplicity) return x.multiplicity <=> y.multiplicity;
    --i;
    --j;
  }
  if (i == 0 && j == 0) return std::strong_ordering::equal;
  return i == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Monomial shift(const Monomial& m, int t) {
  std::vector<Run> runs = m.runs();
  for (Run& r : runs) r.var.degree += t;
  return Monomial::from_runs(std::move(runs));
}

Monomial multiply(const Monomial& m1, const Monomial& m2) {
  std::vector<Run> runs = m1.runs();
  runs.insert(runs.end(), m2.runs().begin(), m2.runs().end());
  return Monomial::from_runs(std::move(runs));
}

Monomial power(const Monomial& m, int e) {
  if (e < 0) throw std::invalid_argument("negative power");
  std::vector<Run> runs = m.runs();
  for (Run& r : runs) r.multiplicity *= e;
  return Monomial::from_runs(std::move(runs));
}

FrequencyProfile window_profile(const Monomial& m, int j) {
  FrequencyProfile p;
  p.window = j;
  for (const Run& r : m.runs()) {
    if (r.var.degree == -j) p.a[index(r.var.color)] += r.multiplicity;
    else if (r.var.degree == -j - 1) p.b[index(r.var.color)] += r.multiplicity;
  }
  return p;
}

std::vector<int> nonzero_windows(const Monomial& m) {
  // A factor at degree d is an a-count in window -d and a b-count in window -d-1.
  std::set<int> js;
  for (const Run& r : m.runs()) {
    js.insert(-r.var.degree);
    js.insert(-r.var.degree - 1);
  }
  return {js.begin(), js.end()};
}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Monomial run() {
    std::vector<Run> runs;
    skip_ws();
    while (pos_ < text_.size()) {
      runs.push_back(factor());
      skip_ws();
    }
    return Monomial::from_runs(std::move(runs));
  }

 private:
  Run factor() {
    Color c = color();
    skip_ws();
    expect('(');
    skip_ws();
    int degree = integer(true);
    skip_ws();
    expect(')');
    std::size_t save = pos_;
    skip_ws();
    int mult = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      mult = integer(false);
    } else {
      pos_ = save;
    }
    return {{c, degree}, mult};
  }

  Color color() {
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError(start, "expected color");
    const char d = text_[pos_];
    if (d < '2' || d > '4') {
      std::size_t end = pos_;
      while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) &&
             text_[end] != '(')
        ++end;
      throw ParseError(start, "unknown color token '" + std::string(text_.substr(start, end - start)) + "'");
    }
    ++pos_;
    bool bar = pos_ < text_.size() && text_[pos_] == '_';
    if (bar) ++pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      throw ParseError(start, "unknown color token '" + std::string(text_.substr(start, end - start)) + "'");
    }
    switch (d) {
      case '2': return bar ? Color::c2b : Color::c2;
      case '3': return bar ? Color::c3b : Color::c3;
      default: return bar ? Color::c4b : Color::c4;
    }
  }

  int integer(bool allow_sign) {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (allow_sign && p < text_.size() && (text_[p] == '-' || text_[p] == '+')) ++p;
    std::size_t digits = p;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    if (p == digits) throw ParseError(start, allow_sign ? "expected integer" : "expected unsigned integer");
    std::string_view s = text_.substr(start, p - start);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(start, "integer out of range");
    pos_ = p;
    return value;
  }

  void expect(char ch) {
    if (pos_ >= text_.size() || text_[pos_] != ch)
      throw ParseError(pos_, std::string("expected '") + ch + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(std::string_view text) { return Parser(text).run(); }

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (const Run& r : m.runs()) {
    if (!out.empty()) out += ' ';
    out += color_token(r.var.color);
    out += '(';
    out += std::to_string(r.var.degree);
    out += ')';
    if (r.multiplicity > 1) {
      out += '^';
      out += std::to_string(r.multiplicity);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << format_monomial(m); }

}  // namespace d4fs
