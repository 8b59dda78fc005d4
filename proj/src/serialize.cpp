#include "odt/serialize.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace odt {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool parse_real(const std::string& tok, double& out) {
  if (tok.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(tok.c_str(), &end);
  return end == tok.c_str() + tok.size() && errno != ERANGE && std::isfinite(out);
}

bool parse_count(const std::string& tok, std::size_t& out) {
  if (tok.empty() || !std::isdigit(static_cast<unsigned char>(tok[0]))) return false;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
  if (end != tok.c_str() + tok.size() || errno == ERANGE) return false;
  out = static_cast<std::size_t>(v);
  return true;
}

bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtoll(tok.c_str(), &end, 10);
  return end == tok.c_str() + tok.size() && errno != ERANGE;
}

class TreeParser {
 public:
  explicit TreeParser(const std::string& text) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) tokens_.push_back(std::move(cur));
      cur.clear();
    };
    for (char c : text) {
      if (c == '(' || c == ')') {
        flush();
        tokens_.emplace_back(1, c);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        cur += c;
      }
    }
    flush();
  }

  SerialTree parse_all() {
    SerialTree t = tree();
    if (pos_ != tokens_.size()) fail("trailing text");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("tree text: " + what + " at token " + std::to_string(pos_));
  }

  const std::string& peek() const {
    static const std::string eof;
    return pos_ < tokens_.size() ? tokens_[pos_] : eof;
  }

  std::string next() {
    if (pos_ >= tokens_.size()) fail("unexpected end");
    return tokens_[pos_++];
  }

  void expect(const std::string& tok) {
    if (next() != tok) fail("expected '" + tok + "'");
  }

  double real() {
    double x = 0;
    if (!parse_real(next(), x)) fail("bad number");
    return x;
  }

  std::size_t count() {
    std::size_t n = 0;
    if (!parse_count(next(), n)) fail("bad count");
    return n;
  }

  std::vector<double> reals_until_paren() {
    std::vector<double> xs;
    while (peek() != "(" && peek() != ")" && pos_ < tokens_.size()) xs.push_back(real());
    return xs;
  }

  RuleDesc desc() {
    const std::string kind = next();
    if (kind == "axis") {
      const std::size_t d = count();
      return AxisParallel{d, real()};
    }
    if (kind == "hyp" || kind == "quad") {
      const std::size_t input_dim = kind == "quad" ? count() : 0;
      std::vector<double> xs = reals_until_paren();
      if (xs.size() < 2) fail("hyperplane needs weights and a bias");
      const double b = xs.back();
      xs.pop_back();
      if (kind == "hyp") return Hyperplane{std::move(xs), b};
      if (xs.size() != lifted_dimension(input_dim)) fail("quad weight count does not match dimension");
      return LiftedHyperplane{input_dim, std::move(xs), b};
    }
    if (kind == "seg") {
      Segment2D s;
      s.from[0] = real();
      s.from[1] = real();
      s.to[0] = real();
      s.to[1] = real();
      return s;
    }
    if (kind == "cut") return Cut{count()};
    fail("unknown rule kind '" + kind + "'");
  }

  SerialTree tree() {
    expect("(");
    const std::string tag = next();
    if (tag == "leaf") {
      const std::size_t n = count();
      expect(")");
      return SerialTree::leaf(n);
    }
    if (tag != "node") fail("expected 'leaf' or 'node'");
    RuleDesc d = desc();
    SerialTree l = tree();
    SerialTree r = tree();
    expect(")");
    return SerialTree::node(std::move(l), std::move(d), std::move(r));
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

std::string describe_desc(const RuleDesc& d) {
  auto reals = [](const std::vector<double>& w, double b) {
    std::string s;
    for (double x : w) s += " " + format_real(x);
    return s + " " + format_real(b);
  };
  return std::visit(
      Overloaded{
          [](const AxisParallel& a) { return "axis " + std::to_string(a.dim) + " " + format_real(a.threshold); },
          [&](const Hyperplane& h) { return "hyp" + reals(h.weights, h.bias); },
          [&](const LiftedHyperplane& h) { return "quad " + std::to_string(h.input_dim) + reals(h.weights, h.bias); },
          [](const Segment2D& s) {
            return "seg " + format_real(s.from[0]) + " " + format_real(s.from[1]) + " " + format_real(s.to[0]) + " " +
                   format_real(s.to[1]);
          },
          [](const Cut& c) { return "cut " + std::to_string(c.position); },
      },
      d);
}

RuleDesc desc_of(const RuleKind& k) {
  return std::visit([](const auto& x) -> RuleDesc { return x; }, k);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string serialize(const SerialTree& t) {
  return fold(
      t, [](std::size_t n) { return "(leaf " + std::to_string(n) + ")"; },
      [](std::string l, const RuleDesc& d, std::string r) { return "(node " + describe_desc(d) + " " + l + " " + r + ")"; });
}

SerialTree parse_tree(const std::string& text) { return TreeParser(text).parse_all(); }

SerialTree to_serial(const DecisionTree& t, std::span<const Rule> rules) {
  return map_leaves([](const Subset& s) { return s.size(); }, map_branches([&](RuleId r) {
                      if (r >= rules.size()) throw std::invalid_argument("to_serial: unknown rule");
                      return desc_of(rules[r].kind);
                    },
                                                                           t));
}

SerialTree to_serial(const BspTree& t) {
  return map_leaves([](const Fragments& f) { return f.size(); },
                    map_branches([](const SceneSegment& s) -> RuleDesc { return Segment2D{s.a, s.b}; }, t));
}

SerialTree to_serial(const McmpTree& t) {
  return map_leaves([](const ChainItem&) { return std::size_t{1}; },
                    map_branches([](std::size_t c) -> RuleDesc { return Cut{c}; }, t));
}

SerialTree to_serial(const KdTree& t) {
  return map_leaves([](const Subset& s) { return s.size(); },
                    map_branches([](const KdSplit& k) -> RuleDesc { return AxisParallel{k.dim, k.threshold}; }, t));
}

Dataset read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) header = split_csv(trim(line));
  }
  if (header.size() < 2 || header.back() != "label") {
    throw std::invalid_argument("csv: header must list features and end with 'label'");
  }
  Dataset data;
  data.dim = header.size() - 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto fields = split_csv(t);
    if (fields.size() != header.size()) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(header.size()) + " fields");
    }
    Point p(data.dim);
    for (std::size_t i = 0; i < data.dim; ++i) {
      if (!parse_real(fields[i], p[i])) {
        throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad number '" + fields[i] + "'");
      }
    }
    long long label = 0;
    if (!parse_int(fields.back(), label)) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad label '" + fields.back() + "'");
    }
    data.points.push_back(std::move(p));
    data.labels.push_back(static_cast<int>(label));
  }
  return data;
}

std::vector<SceneSegment> read_scene(std::istream& in) {
  std::vector<SceneSegment> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    if (toks.empty() || toks.front()[0] == '#') continue;
    double v[4];
    if (toks.size() != 4 || !parse_real(toks[0], v[0]) || !parse_real(toks[1], v[1]) || !parse_real(toks[2], v[2]) ||
        !parse_real(toks[3], v[3])) {
      throw std::invalid_argument("scene line " + std::to_string(line_no) + ": expected 'x1 y1 x2 y2'");
    }
    SceneSegment s{{v[0], v[1]}, {v[2], v[3]}, out.size()};
    if (length(s) <= kEpsilon) {
      throw std::invalid_argument("scene line " + std::to_string(line_no) + ": zero-length segment");
    }
    out.push_back(s);
  }
  return out;
}

AncestryMatrix read_matrix(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::vector<int> row;
    std::string tok;
    while (ss >> tok) {
      long long v = 0;
      if (!parse_int(tok, v)) throw std::invalid_argument("matrix: bad entry '" + tok + "'");
      row.push_back(static_cast<int>(v));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return AncestryMatrix::from_rows(rows);
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (const std::string& f : split_csv(text)) {
    std::size_t n = 0;
    if (!parse_count(f, n) || n == 0) throw std::invalid_argument("sizes: bad entry '" + f + "'");
    out.push_back(n);
  }
  return out;
}

}  // namespace odt
