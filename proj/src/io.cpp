#include "tolrep/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace tolrep {

namespace {

struct Token {
  std::string text;
  int line = 0;
};

struct TokenStream {
  std::string source;
  std::vector<Token> tokens;
  std::size_t pos = 0;

  [[noreturn]] void fail(int line, const std::string& message) const {
    throw input_error(source + ":" + std::to_string(line) + ": " + message);
  }

  bool done() const { return pos >= tokens.size(); }
  int last_line() const { return tokens.empty() ? 1 : tokens.back().line; }

  const Token& peek() const {
    if (done()) throw input_error(source + ": unexpected end of file");
    return tokens[pos];
  }
  Token next() {
    const Token t = peek();
    ++pos;
    return t;
  }
  void expect_keyword(const std::string& kw) {
    const Token t = next();
    if (t.text != kw) fail(t.line, "expected '" + kw + "', got '" + t.text + "'");
  }
  int next_int(const std::string& what) {
    const Token t = next();
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail(t.line, "expected " + what + ", got '" + t.text + "'");
    return value;
  }
};

TokenStream tokenize(std::istream& in, const std::string& source) {
  TokenStream ts;
  ts.source = source;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream words(line);
    std::string word;
    while (words >> word) ts.tokens.push_back({word, ln});
  }
  return ts;
}

}  // namespace

FiniteAlgebra parse_algebra(std::istream& in, const std::string& source) {
  TokenStream ts = tokenize(in, source);
  ts.expect_keyword("algebra");
  const Token name = ts.next();
  ts.expect_keyword("size");
  const int n = ts.next_int("the universe size");
  if (n < 1) ts.fail(ts.tokens[ts.pos - 1].line, "empty universes are rejected");

  std::vector<Operation> ops;
  while (!ts.done()) {
    const Token kw = ts.next();
    if (kw.text != "op") ts.fail(kw.line, "expected 'op', got '" + kw.text + "'");
    const Token op_name = ts.next();
    const int arity = ts.next_int("an arity");
    if (arity < 0) ts.fail(op_name.line, "negative arity");
    std::uint64_t entries = 1;
    for (int i = 0; i < arity; ++i) {
      entries *= static_cast<std::uint64_t>(n);
      if (entries > (1ull << 24))
        ts.fail(op_name.line, "operation table too large to parse");
    }
    Operation op{op_name.text, arity, {}};
    op.table.reserve(static_cast<std::size_t>(entries));
    for (std::uint64_t i = 0; i < entries; ++i) {
      const int v = ts.next_int("a table entry for op '" + op_name.text + "'");
      if (v < 0 || v >= n)
        ts.fail(ts.tokens[ts.pos - 1].line,
                "table entry " + std::to_string(v) + " outside {0.." +
                    std::to_string(n - 1) + "}");
      op.table.push_back(v);
    }
    ops.push_back(std::move(op));
  }
  return FiniteAlgebra(name.text, n, std::move(ops));
}

FiniteAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open algebra file '" + path + "'");
  return parse_algebra(in, path);
}

NamedRelation parse_relation(std::istream& in, const std::string& source) {
  TokenStream ts = tokenize(in, source);
  ts.expect_keyword("rel");
  const Token name = ts.next();
  ts.expect_keyword("size");
  const int n = ts.next_int("the universe size");
  if (n < 1) ts.fail(ts.tokens[ts.pos - 1].line, "empty universes are rejected");

  BinRel rel(n);
  while (!ts.done()) {
    if (ts.peek().text == "reflexive") {
      ts.next();
      rel |= BinRel::diagonal(n);
      continue;
    }
    const int a = ts.next_int("a pair's first element");
    const int b = ts.next_int("a pair's second element");
    if (a < 0 || a >= n || b < 0 || b >= n)
      ts.fail(ts.tokens[ts.pos - 1].line,
              "pair (" + std::to_string(a) + "," + std::to_string(b) +
                  ") outside {0.." + std::to_string(n - 1) + "}");
    rel.set(a, b);
  }
  return NamedRelation{name.text, std::move(rel)};
}

NamedRelation load_relation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open relation file '" + path + "'");
  return parse_relation(in, path);
}

void write_algebra(std::ostream& out, const FiniteAlgebra& a) {
  out << "algebra " << a.name() << "\n";
  out << "size " << a.size() << "\n";
  for (const Operation& f : a.ops()) {
    out << "op " << f.name << " " << f.arity << "\n";
    if (f.arity == 0) {
      out << f.table[0] << "\n";
      continue;
    }
    // one row (last argument sweep) per line
    const std::size_t row = static_cast<std::size_t>(a.size());
    for (std::size_t i = 0; i < f.table.size(); i += row) {
      for (std::size_t j = 0; j < row; ++j)
        out << (j ? " " : "") << f.table[i + j];
      out << "\n";
    }
  }
}

void write_relation(std::ostream& out, const BinRel& r, const std::string& name) {
  out << "rel " << name << "\n";
  out << "size " << r.size() << "\n";
  for (auto [a, b] : r.pairs()) out << a << " " << b << "\n";
}

std::string format_pairs(const BinRel& r) {
  std::ostringstream os;
  bool first = true;
  for (auto [a, b] : r.pairs()) {
    os << (first ? "" : " ") << "(" << a << "," << b << ")";
    first = false;
  }
  return os.str();
}

}  // namespace tolrep
