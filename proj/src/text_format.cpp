#include "sortforge/text_format.hpp"

#include <cctype>
#include <charconv>
#include <variant>
#include <vector>

#include "sortforge/check_report.hpp"

namespace sortforge {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::expected_fail_confirmed:
      return "expected-fail-confirmed";
  }
  return "fail";
}

std::string render(Key k) { return std::to_string(k); }

std::string render(const KeyList& l) {
  std::string out = "[";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(l[i]);
  }
  out += ']';
  return out;
}

std::string render(const NodeTree& t) {
  std::string out;
  std::vector<std::variant<const NodeTree*, const char*>> work{&t};
  while (!work.empty()) {
    auto item = work.back();
    work.pop_back();
    if (auto* lit = std::get_if<const char*>(&item)) {
      out += *lit;
      continue;
    }
    const NodeTree* n = std::get<const NodeTree*>(item);
    if (n->empty()) {
      out += '.';
      continue;
    }
    out += '(';
    out += std::to_string(n->key());
    out += ' ';
    work.emplace_back(")");
    work.emplace_back(&n->right());
    work.emplace_back(" ");
    work.emplace_back(&n->left());
  }
  return out;
}

std::string render(const LeafTree& t) {
  std::string out;
  std::vector<std::variant<const LeafTree*, const char*>> work{&t};
  while (!work.empty()) {
    auto item = work.back();
    work.pop_back();
    if (auto* lit = std::get_if<const char*>(&item)) {
      out += *lit;
      continue;
    }
    const LeafTree* n = std::get<const LeafTree*>(item);
    if (n->is_leaf()) {
      auto p = n->payload();
      out += p ? std::to_string(*p) : std::string("_");
      continue;
    }
    out += '{';
    work.emplace_back("}");
    work.emplace_back(&n->right());
    work.emplace_back(" ");
    work.emplace_back(&n->left());
  }
  return out;
}

namespace {

constexpr int kMaxNesting = 100'000;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Key key() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    Key value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("integer out of 64-bit range");
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void finish() {
    if (!at_end()) fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) +
                     "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

NodeTree node_tree(Cursor& in, int depth) {
  if (depth > kMaxNesting) in.fail("tree nested too deeply");
  if (in.peek() == '.') {
    in.expect('.');
    return {};
  }
  in.expect('(');
  Key k = in.key();
  NodeTree l = node_tree(in, depth + 1);
  NodeTree r = node_tree(in, depth + 1);
  in.expect(')');
  return NodeTree::node(k, std::move(l), std::move(r));
}

LeafTree leaf_tree(Cursor& in, int depth) {
  if (depth > kMaxNesting) in.fail("tree nested too deeply");
  char c = in.peek();
  if (c == '_') {
    in.expect('_');
    return {};
  }
  if (c == '{') {
    in.expect('{');
    LeafTree l = leaf_tree(in, depth + 1);
    LeafTree r = leaf_tree(in, depth + 1);
    in.expect('}');
    return LeafTree::branch(std::move(l), std::move(r));
  }
  return LeafTree::leaf(in.key());
}

}  // namespace

Key parse_key(std::string_view text) {
  Cursor in(text);
  Key k = in.key();
  in.finish();
  return k;
}

KeyList parse_key_list(std::string_view text) {
  Cursor in(text);
  KeyList out;
  in.expect('[');
  if (in.peek() != ']') {
    out.push_back(in.key());
    while (in.peek() == ',') {
      in.expect(',');
      out.push_back(in.key());
    }
  }
  in.expect(']');
  in.finish();
  return out;
}

NodeTree parse_node_tree(std::string_view text) {
  Cursor in(text);
  NodeTree t = node_tree(in, 0);
  in.finish();
  return t;
}

LeafTree parse_leaf_tree(std::string_view text) {
  Cursor in(text);
  LeafTree t = leaf_tree(in, 0);
  in.finish();
  return t;
}

std::string format_witness(const WitnessFields& fields) {
  std::string out;
  for (const auto& [name, value] : fields) {
    if (!out.empty()) out += "; ";
    out += name;
    out += '=';
    out += value;
  }
  return out;
}

WitnessFields parse_witness(std::string_view text) {
  WitnessFields fields;
  while (!text.empty()) {
    auto end = text.find(';');
    std::string_view part = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ParseError("witness field without name: \"" + std::string(part) + "\"");
    fields.emplace_back(std::string(part.substr(0, eq)), std::string(part.substr(eq + 1)));
  }
  return fields;
}

}  // namespace sortforge
