#ifndef AAK_TREEBANK_HPP
#define AAK_TREEBANK_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aak::treebank {

// One node of a bracketed constituency parse. A node is a leaf iff it carries
// a surface token iff it has no children. Spans are half-open token index
// ranges assigned left to right from 0; a parent's span is the union of its
// children's contiguous, in-order spans.
struct ConstituencyTree {
  std::string label;
  std::vector<ConstituencyTree> children;
  std::optional<std::string> token;
  int span_begin = 0;
  int span_end = 0;

  bool is_leaf() const { return token.has_value(); }
  int span_length() const { return span_end - span_begin; }
  std::size_t num_nodes() const;

  // Surface tokens of this subtree in span order.
  std::vector<std::string> leaf_tokens() const;
  // Leaf labels (POS tags) in span order.
  std::vector<std::string> leaf_tags() const;

  const ConstituencyTree& node_at(const std::vector<int>& path) const;

  bool operator==(const ConstituencyTree& other) const;
};

struct Constituent {
  std::string tag;
  std::vector<std::string> tokens;
  int span_begin = 0;
  int span_end = 0;
  std::vector<int> node_path;  // child indices from the root
};

// Parses one bracketed tree (Stanford/PTB format, leaves are `(TAG token)`).
// Functional tag suffixes are stripped to the base tag (`NP-SBJ` -> `NP`),
// `S'` is normalized to `SBAR`, an unlabeled outer wrapper becomes `ROOT`,
// and `-NONE-` trace subtrees are removed. Throws ParseError with the byte
// offset for unbalanced input, and on empty input.
ConstituencyTree parse_bracketed(std::string_view text);

// Inverse of parse_bracketed up to the normalizations above:
// parse_bracketed(render_bracketed(t)) == t for any tree from the parser.
std::string render_bracketed(const ConstituencyTree& tree);

// Every node of the tree as a candidate unit, pre-order, root included.
std::vector<Constituent> enumerate_constituents(const ConstituencyTree& tree);

// Tree records read from a file: one tree per logical record, records
// separated by blank lines or one per line. A depth-0 line starting with
// `#doc <id>` switches the current document id; the default id is the file
// stem. Other depth-0 `#` lines are comments.
struct TreeRecord {
  std::string doc_id;
  int sentence_index = 0;  // within the document
  ConstituencyTree tree;
};

std::vector<TreeRecord> read_tree_file(const std::string& path);
std::vector<TreeRecord> read_trees(std::string_view text,
                                   const std::string& default_doc_id);

}  // namespace aak::treebank

#endif  // AAK_TREEBANK_HPP
