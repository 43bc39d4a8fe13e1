#include "rdfpg/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>

#include "rdfpg/error.hpp"

namespace rdfpg {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_hex(char c) { return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }

bool is_prefix_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.' || is_high(c); }
bool is_local_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.' || c == ':' || c == '%' || is_high(c);
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  Parser(std::string_view text, const TurtleOptions& options)
      : src_(text), options_(options), out_(options.initial_prefixes) {}

  TripleSet run() {
    for (;;) {
      skip_ws();
      if (eof()) break;
      if (starts_with("@prefix")) {
        prefix_directive(true);
      } else if (keyword_ahead("PREFIX")) {
        prefix_directive(false);
      } else if (starts_with("@base") || keyword_ahead("BASE")) {
        fail("a statement (@base is not supported)");
      } else {
        statement();
      }
    }
    return std::move(out_);
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  const TurtleOptions& options_;
  TripleSet out_;
  std::map<std::string, std::string> declared_;

  bool eof() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

  bool keyword_ahead(std::string_view kw) const {
    if (src_.size() - pos_ < kw.size() + 1) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char c = src_[pos_ + i];
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      if (c != kw[i]) return false;
    }
    return is_ws(src_[pos_ + kw.size()]);
  }

  std::string position() const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return std::to_string(line) + ":" + std::to_string(column);
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = eof() ? "end of input" : "'" + std::string(1, peek()) + "'";
    throw Error(ErrorCode::SyntaxError, position() + ": expected " + expected + ", found " + found);
  }

  [[noreturn]] void fail_with(ErrorCode code, const std::string& message) const {
    throw Error(code, position() + ": " + message);
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (is_ws(c)) {
        ++pos_;
      } else if (c == '#') {
        while (!eof() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c) fail(what);
    ++pos_;
  }

  void prefix_directive(bool turtle_style) {
    pos_ += turtle_style ? 7 : 6;
    skip_ws();
    std::size_t start = pos_;
    while (!eof() && is_prefix_char(peek())) ++pos_;
    std::string prefix(src_.substr(start, pos_ - start));
    if (!prefix.empty() && prefix.back() == '.') fail("a prefix name not ending in '.'");
    if (peek() != ':') fail("':' after prefix name");
    ++pos_;
    skip_ws();
    Iri ns = iriref();
    auto previous = declared_.find(prefix);
    if (previous != declared_.end() && previous->second != ns.str() && options_.on_warning) {
      options_.on_warning("prefix '" + prefix + ":' redefined at " + position() + "; the last binding wins");
    }
    declared_[prefix] = ns.str();
    out_.prefixes().bind(prefix, ns.str());
    skip_ws();
    // The terminating '.' is required by Turtle but tolerated when missing.
    if (turtle_style && peek() == '.') ++pos_;
  }

  void statement() {
    Subject subject = subject_term();
    predicate_object_list(subject);
    expect('.', "'.' at end of statement");
  }

  Subject subject_term() {
    skip_ws();
    char c = peek();
    if (c == '<') return iriref();
    if (c == '_' && peek(1) == ':') return blank_node();
    if (c == '[') fail_with(ErrorCode::BlankNodeUnsupported, "anonymous blank nodes are not supported");
    if (c == '(') fail("a subject (collections are not supported)");
    if (c == '"') fail("a subject (literals cannot be subjects)");
    return prefixed_name();
  }

  void predicate_object_list(const Subject& subject) {
    for (;;) {
      Iri predicate = verb();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      if (peek() == '.' || eof()) return;
    }
  }

  Iri verb() {
    skip_ws();
    if (peek() == 'a' && (is_ws(peek(1)) || peek(1) == '<' || peek(1) == '"')) {
      ++pos_;
      return vocab::rdf_type();
    }
    if (peek() == '_' && peek(1) == ':') fail("a predicate IRI (blank nodes cannot be predicates)");
    if (peek() == '<') return iriref();
    return prefixed_name();
  }

  void object_list(const Subject& subject, const Iri& predicate) {
    for (;;) {
      out_.insert(Triple{subject, predicate, object_term()});
      skip_ws();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  Object object_term() {
    skip_ws();
    char c = peek();
    if (c == '"') return literal();
    if (c == '<') return iriref();
    if (c == '_' && peek(1) == ':') return blank_node();
    if (c == '[') fail_with(ErrorCode::BlankNodeUnsupported, "anonymous blank nodes are not supported");
    if (c == '(') fail("an object (collections are not supported)");
    if (c == '\'') fail("an object (single-quoted strings are not supported)");
    if (is_digit(c) || c == '+' || c == '-') fail("an object (unquoted numeric literals are not supported)");
    return prefixed_name();
  }

  BlankNode blank_node() {
    std::size_t start = pos_;
    pos_ += 2;
    std::size_t label_start = pos_;
    while (!eof() && (is_alpha(peek()) || is_digit(peek()) || peek() == '_' || peek() == '-' ||
                      peek() == '.' || is_high(peek()))) {
      ++pos_;
    }
    while (pos_ > label_start && src_[pos_ - 1] == '.') --pos_;
    if (pos_ == label_start) fail("a blank node label");
    if (!options_.allow_blank_nodes) {
      pos_ = start;
      fail_with(ErrorCode::BlankNodeUnsupported, "blank nodes are not supported (use skolemization)");
    }
    return BlankNode{std::string(src_.substr(label_start, pos_ - label_start))};
  }

  std::uint32_t hex_escape(int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (!is_hex(peek())) fail("a hexadecimal digit");
      char c = peek();
      cp = cp * 16 + static_cast<std::uint32_t>(is_digit(c) ? c - '0' : (c | 0x20) - 'a' + 10);
      ++pos_;
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("a valid code point");
    return cp;
  }

  Iri iriref() {
    if (peek() != '<') fail("'<'");
    ++pos_;
    std::string value;
    for (;;) {
      if (eof()) fail("'>' closing the IRI");
      char c = peek();
      if (c == '>') {
        ++pos_;
        break;
      }
      if (is_ws(c)) fail("'>' (IRIs cannot contain whitespace)");
      if (c == '<' || c == '"') fail("'>'");
      if (c == '\\') {
        ++pos_;
        char kind = peek();
        if (kind != 'u' && kind != 'U') fail("'u' or 'U' after '\\' in an IRI");
        ++pos_;
        std::uint32_t cp = hex_escape(kind == 'u' ? 4 : 8);
        if (cp <= 0x20) fail("an IRI character (escaped whitespace or control)");
        append_utf8(value, cp);
        continue;
      }
      value += c;
      ++pos_;
    }
    if (!Iri::is_valid(value)) fail("an absolute IRI (relative IRIs are not supported)");
    return Iri(std::move(value));
  }

  Iri prefixed_name() {
    std::size_t start = pos_;
    while (!eof() && is_prefix_char(peek())) ++pos_;
    std::string prefix(src_.substr(start, pos_ - start));
    if (peek() != ':') {
      pos_ = start;
      fail("an IRI or prefixed name");
    }
    if (!prefix.empty() && (prefix.back() == '.' || is_digit(prefix.front()))) {
      pos_ = start;
      fail("a valid prefix name");
    }
    ++pos_;
    std::string local;
    while (!eof()) {
      char c = peek();
      if (c == '\\') {
        char next = peek(1);
        static constexpr std::string_view escapable = "_~.-!$&'()*+,;=/?#@%";
        if (escapable.find(next) == std::string_view::npos) fail("an escapable character after '\\'");
        local += next;
        pos_ += 2;
      } else if (is_local_char(c)) {
        local += c;
        ++pos_;
      } else {
        break;
      }
    }
    // A trailing '.' terminates the statement rather than belonging to the name.
    while (!local.empty() && local.back() == '.' && src_[pos_ - 1] == '.' && src_[pos_ - 2] != '\\') {
      local.pop_back();
      --pos_;
    }
    auto ns = out_.prefixes().lookup(prefix);
    if (!ns) {
      pos_ = start;
      fail_with(ErrorCode::UnknownPrefix, "prefix '" + prefix + ":' is not defined");
    }
    std::string full = *ns + local;
    if (!Iri::is_valid(full)) fail("a prefixed name that expands to a valid IRI");
    return Iri(std::move(full));
  }

  Literal literal() {
    ++pos_;  // opening quote
    std::string lexical;
    for (;;) {
      if (eof()) fail("'\"' closing the string");
      char c = peek();
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c == '\n' || c == '\r') fail("'\"' before end of line");
      if (c != '\\') {
        lexical += c;
        ++pos_;
        continue;
      }
      ++pos_;
      char e = peek();
      ++pos_;
      switch (e) {
        case 't': lexical += '\t'; break;
        case 'b': lexical += '\b'; break;
        case 'n': lexical += '\n'; break;
        case 'r': lexical += '\r'; break;
        case 'f': lexical += '\f'; break;
        case '"': lexical += '"'; break;
        case '\'': lexical += '\''; break;
        case '\\': lexical += '\\'; break;
        case 'u': append_utf8(lexical, hex_escape(4)); break;
        case 'U': append_utf8(lexical, hex_escape(8)); break;
        default:
          --pos_;
          fail("a valid string escape");
      }
    }
    if (peek() == '@') fail("'^^' or end of literal (language tags are not supported)");
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      Iri datatype = peek() == '<' ? iriref() : prefixed_name();
      return Literal{std::move(lexical), std::move(datatype)};
    }
    return Literal{std::move(lexical), vocab::xsd_string()};
  }
};

// ---------------------------------------------------------------------------
// Writer

bool is_emittable_prefix(const std::string& prefix) {
  if (prefix.empty()) return true;
  if (!is_alpha(prefix.front())) return false;
  return std::all_of(prefix.begin(), prefix.end(),
                     [](char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-'; });
}

std::string hex4(unsigned value) {
  static constexpr char digits[] = "0123456789ABCDEF";
  std::string out = "\\u";
  for (int shift = 12; shift >= 0; shift -= 4) out += digits[(value >> shift) & 0xF];
  return out;
}

std::string write_iriref(const Iri& iri) {
  std::string out = "<";
  for (char c : iri.str()) {
    auto u = static_cast<unsigned char>(c);
    static constexpr std::string_view reserved = "<>\"{}|^`\\";
    if (u < 0x20 || reserved.find(c) != std::string_view::npos) {
      out += hex4(u);
    } else {
      out += c;
    }
  }
  return out + ">";
}

class Writer {
 public:
  explicit Writer(const TripleSet& triples) {
    for (const auto& [prefix, ns] : triples.prefixes().bindings()) {
      if (is_emittable_prefix(prefix) && Iri::is_valid(ns)) prefixes_.bind(prefix, ns);
    }
  }

  const PrefixMap& prefixes() const { return prefixes_; }

  std::string iri(const Iri& value) const {
    if (value == vocab::rdf_type()) return "a";
    return term(value);
  }

  std::string term(const Iri& value) const {
    if (auto compacted = prefixes_.compact(value)) return compacted->first + ":" + compacted->second;
    return write_iriref(value);
  }

  std::string term(const BlankNode& b) const { return "_:" + b.label; }

  std::string term(const Literal& l) const {
    std::string out = "\"";
    for (char c : l.lexical) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            out += hex4(static_cast<unsigned char>(c));
          } else {
            out += c;
          }
      }
    }
    out += '"';
    if (l.datatype != vocab::xsd_string()) out += "^^" + term(l.datatype);
    return out;
  }

 private:
  PrefixMap prefixes_;
};

}  // namespace

TripleSet parse_turtle(std::string_view text, const TurtleOptions& options) {
  return Parser(text, options).run();
}

std::string serialize_turtle(const TripleSet& triples) {
  Writer writer(triples);
  std::string out;
  for (const auto& [prefix, ns] : writer.prefixes().bindings()) {
    out += "@prefix " + prefix + ": " + write_iriref(Iri(ns)) + " .\n";
  }

  // Group by subject, then predicate. Subjects sort by their full form;
  // rdf:type comes first among the predicates.
  auto predicate_order = [](const Iri& a, const Iri& b) {
    bool at = a == vocab::rdf_type();
    bool bt = b == vocab::rdf_type();
    return at != bt ? at : a < b;
  };
  std::map<Subject, std::map<Iri, std::vector<const Object*>, decltype(predicate_order)>> grouped;
  for (const Triple& t : triples) {
    grouped.try_emplace(t.subject, predicate_order).first->second[t.predicate].push_back(&t.object);
  }

  for (const auto& [subject, predicates] : grouped) {
    out += '\n';
    out += std::visit([&](const auto& s) { return writer.term(s); }, subject);
    bool first_predicate = true;
    for (const auto& [predicate, objects] : predicates) {
      out += first_predicate ? " " : " ;\n    ";
      first_predicate = false;
      out += writer.iri(predicate);
      for (std::size_t i = 0; i < objects.size(); ++i) {
        out += i == 0 ? " " : " ,\n        ";
        out += std::visit([&](const auto& o) { return writer.term(o); }, *objects[i]);
      }
    }
    out += " .\n";
  }
  return out;
}

TripleSet skolemize(const TripleSet& triples, std::string_view base) {
  std::set<std::string> labels;
  for (const Triple& t : triples) {
    if (const auto* b = std::get_if<BlankNode>(&t.subject)) labels.insert(b->label);
    if (const auto* b = std::get_if<BlankNode>(&t.object)) labels.insert(b->label);
  }
  std::map<std::string, Iri> fresh;
  std::size_t counter = 0;
  for (const std::string& label : labels) {
    fresh.emplace(label, Iri(std::string(base) + std::to_string(counter++)));
  }

  TripleSet out(triples.prefixes());
  if (!labels.empty() && !out.prefixes().lookup("skolem")) out.prefixes().bind("skolem", std::string(base));
  for (const Triple& t : triples) {
    Triple copy = t;
    if (const auto* b = std::get_if<BlankNode>(&t.subject)) copy.subject = fresh.at(b->label);
    if (const auto* b = std::get_if<BlankNode>(&t.object)) copy.object = fresh.at(b->label);
    out.insert(std::move(copy));
  }
  return out;
}

}  // namespace rdfpg
