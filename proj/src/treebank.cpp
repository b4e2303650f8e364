#include "aak/treebank.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aak/errors.hpp"

namespace aak::treebank {

namespace {

std::string normalize_tag(std::string tag) {
  if (tag == "S'") return "SBAR";
  // PTB escape tags (-NONE-, -LRB-, -RRB-) start with '-' and stay verbatim;
  // everything else loses functional suffixes and gap indices.
  if (!tag.empty() && tag[0] != '-') {
    std::size_t cut = tag.find_first_of("-=");
    if (cut != std::string::npos) tag.resize(cut);
  }
  return tag;
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what, pos);
  }

  std::string read_atom() {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return std::string(text.substr(start, pos - start));
  }

  // Parses `(TAG token)` or `(TAG child...)`. Returns nullopt for removed
  // `-NONE-` subtrees and for internal nodes all of whose children vanished.
  std::optional<ConstituencyTree> parse_node() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    skip_ws();
    ConstituencyTree node;
    if (pos < text.size() && text[pos] != '(' && text[pos] != ')') {
      node.label = read_atom();
    }
    skip_ws();
    if (pos >= text.size()) fail("unbalanced parentheses");
    if (text[pos] == ')') fail("empty constituent");

    if (text[pos] != '(') {
      // Leaf: the remaining atom is the surface token.
      node.token = read_atom();
      skip_ws();
      if (pos >= text.size()) fail("unbalanced parentheses");
      if (text[pos] != ')') fail("expected ')' after leaf token");
      ++pos;
      if (node.label == "-NONE-") return std::nullopt;
      node.label = normalize_tag(std::move(node.label));
      return node;
    }
    while (true) {
      skip_ws();
      if (pos >= text.size()) fail("unbalanced parentheses");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] != '(') fail("unexpected text inside constituent");
      auto child = parse_node();
      if (child) node.children.push_back(std::move(*child));
    }
    if (node.children.empty()) return std::nullopt;  // all traces
    node.label = normalize_tag(std::move(node.label));
    if (node.label.empty()) node.label = "ROOT";  // PTB outer wrapper
    return node;
  }
};

void assign_spans(ConstituencyTree& node, int& next) {
  if (node.is_leaf()) {
    node.span_begin = next;
    node.span_end = ++next;
    return;
  }
  node.span_begin = next;
  for (auto& child : node.children) assign_spans(child, next);
  node.span_end = next;
}

void collect_constituents(const ConstituencyTree& node, std::vector<int>& path,
                          const std::vector<std::string>& sentence,
                          std::vector<Constituent>& out) {
  Constituent c;
  c.tag = node.label;
  c.span_begin = node.span_begin;
  c.span_end = node.span_end;
  c.tokens.assign(sentence.begin() + node.span_begin,
                  sentence.begin() + node.span_end);
  c.node_path = path;
  out.push_back(std::move(c));
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_constituents(node.children[i], path, sentence, out);
    path.pop_back();
  }
}

}  // namespace

std::size_t ConstituencyTree::num_nodes() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.num_nodes();
  return n;
}

std::vector<std::string> ConstituencyTree::leaf_tokens() const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(span_length()));
  auto walk = [&](auto&& self, const ConstituencyTree& node) -> void {
    if (node.is_leaf()) {
      out.push_back(*node.token);
      return;
    }
    for (const auto& c : node.children) self(self, c);
  };
  walk(walk, *this);
  return out;
}

std::vector<std::string> ConstituencyTree::leaf_tags() const {
  std::vector<std::string> out;
  auto walk = [&](auto&& self, const ConstituencyTree& node) -> void {
    if (node.is_leaf()) {
      out.push_back(node.label);
      return;
    }
    for (const auto& c : node.children) self(self, c);
  };
  walk(walk, *this);
  return out;
}

const ConstituencyTree& ConstituencyTree::node_at(
    const std::vector<int>& path) const {
  const ConstituencyTree* node = this;
  for (int idx : path) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= node->children.size()) {
      throw ContractError("node_at: path leaves the tree");
    }
    node = &node->children[static_cast<std::size_t>(idx)];
  }
  return *node;
}

bool ConstituencyTree::operator==(const ConstituencyTree& other) const {
  return label == other.label && token == other.token &&
         span_begin == other.span_begin && span_end == other.span_end &&
         children == other.children;
}

ConstituencyTree parse_bracketed(std::string_view text) {
  Parser p{text};
  p.skip_ws();
  if (p.pos >= text.size()) throw ParseError("empty input", 0);
  auto root = p.parse_node();
  p.skip_ws();
  if (p.pos < text.size()) {
    throw ParseError("trailing text after tree", p.pos);
  }
  if (!root) throw ParseError("tree contains no tokens", 0);
  int next = 0;
  assign_spans(*root, next);
  return std::move(*root);
}

std::string render_bracketed(const ConstituencyTree& tree) {
  std::string out;
  auto walk = [&](auto&& self, const ConstituencyTree& node) -> void {
    out.push_back('(');
    out += node.label;
    if (node.is_leaf()) {
      out.push_back(' ');
      out += *node.token;
    } else {
      for (const auto& c : node.children) {
        out.push_back(' ');
        self(self, c);
      }
    }
    out.push_back(')');
  };
  walk(walk, tree);
  return out;
}

std::vector<Constituent> enumerate_constituents(const ConstituencyTree& tree) {
  std::vector<Constituent> out;
  out.reserve(tree.num_nodes());
  std::vector<int> path;
  const auto sentence = tree.leaf_tokens();
  collect_constituents(tree, path, sentence, out);
  return out;
}

std::vector<TreeRecord> read_trees(std::string_view text,
                                   const std::string& default_doc_id) {
  std::vector<TreeRecord> records;
  std::string doc_id = default_doc_id;
  int sentence_index = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      std::size_t eol = text.find('\n', i);
      std::string_view line =
          text.substr(i, eol == std::string_view::npos ? text.size() - i
                                                       : eol - i);
      if (line.rfind("#doc ", 0) == 0) {
        auto id = line.substr(5);
        while (!id.empty() && std::isspace(static_cast<unsigned char>(id.back())))
          id.remove_suffix(1);
        doc_id = std::string(id);
        sentence_index = 0;
      }
      i = eol == std::string_view::npos ? text.size() : eol + 1;
      continue;
    }
    if (c != '(') {
      throw ParseError("expected '(' or '#' at record start", i);
    }
    // Take the balanced group starting here as one record.
    int depth = 0;
    std::size_t j = i;
    for (; j < text.size(); ++j) {
      if (text[j] == '(') ++depth;
      if (text[j] == ')' && --depth == 0) {
        ++j;
        break;
      }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", text.size());
    TreeRecord rec;
    rec.doc_id = doc_id;
    rec.sentence_index = sentence_index++;
    rec.tree = parse_bracketed(text.substr(i, j - i));
    records.push_back(std::move(rec));
    i = j;
  }
  return records;
}

std::vector<TreeRecord> read_tree_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open tree file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_trees(buf.str(), std::filesystem::path(path).stem().string());
}

}  // namespace aak::treebank
