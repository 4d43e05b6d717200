#include "snprnet/enewick.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "newick_writer.hpp"
#include "snprnet/canon.hpp"
#include "snprnet/errors.hpp"

namespace snprnet {

namespace {

bool is_special(char c) {
  switch (c) {
    case '(': case ')': case '[': case ']': case '\'': case ':': case ';': case ',': case '#':
      return true;
    default:
      return std::isspace(static_cast<unsigned char>(c)) != 0;
  }
}

struct HybridUse {
  VertexId vertex = kNoVertex;
  int occurrences = 0;
  int definitions = 0;  // occurrences that carry the child
  std::size_t line = 0, column = 0;
};

class Parser {
 public:
  Parser(std::string_view text, std::size_t first_line) : text_(text), line_(first_line) {}

  PhyloNetwork parse() {
    skip_space();
    if (at_end()) fail(ErrorCode::SyntaxError, "empty input");
    labels_.emplace_back();  // pendant root, vertex 0
    const VertexId top = node();
    edges_.push_back({0, top});
    skip_space();
    expect(';');
    skip_space();
    if (!at_end()) fail(ErrorCode::SyntaxError, "unexpected text after ';'");

    for (const auto& [tag, use] : hybrids_) {
      if (use.occurrences != 2 || use.definitions != 1) {
        throw ParseError(ErrorCode::TagArityError,
                         "hybrid tag #" + tag + " occurs " + std::to_string(use.occurrences) +
                             " times with " + std::to_string(use.definitions) +
                             " subtree occurrences; expected 2 and 1",
                         use.line, use.column);
      }
    }
    try {
      const std::size_t count = labels_.size();
      return build_network_dense(count, std::move(edges_), std::move(labels_));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(err.code(), err.message(), start_line_, 1);
    }
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& message) const {
    throw ParseError(code, message, line_, column_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void expect(char c) {
    if (at_end()) fail(ErrorCode::SyntaxError, std::string("expected '") + c + "' at end of input");
    if (peek() != c) {
      fail(ErrorCode::SyntaxError, std::string("expected '") + c + "', found '" + peek() + "'");
    }
    advance();
  }

  VertexId new_vertex() {
    labels_.emplace_back();
    return static_cast<VertexId>(labels_.size() - 1);
  }

  std::string label() {
    std::string out;
    if (!at_end() && peek() == '\'') {
      advance();
      for (;;) {
        if (at_end()) fail(ErrorCode::SyntaxError, "unterminated quoted label");
        char c = peek();
        advance();
        if (c == '\'') {
          if (!at_end() && peek() == '\'') {
            out.push_back('\'');
            advance();
            continue;
          }
          break;
        }
        out.push_back(c);
      }
      if (out.empty()) fail(ErrorCode::SyntaxError, "empty quoted label");
      return out;
    }
    while (!at_end() && !is_special(peek())) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  // '#' [letters] digits, returned without the '#'.
  std::string hybrid_tag() {
    advance();  // '#'
    std::string tag;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      tag.push_back(peek());
      advance();
    }
    std::size_t digits = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      tag.push_back(peek());
      advance();
      ++digits;
    }
    if (digits == 0) fail(ErrorCode::SyntaxError, "hybrid tag needs a number, as in #H1");
    return tag;
  }

  void check_trailer() {
    skip_space();
    if (at_end()) return;
    if (peek() == ':') fail(ErrorCode::SyntaxError, "branch lengths are not supported");
    if (peek() == '[') fail(ErrorCode::SyntaxError, "comments and annotations are not supported");
  }

  HybridUse& use_of(const std::string& tag, std::size_t line, std::size_t column) {
    auto [it, inserted] = hybrids_.try_emplace(tag);
    if (inserted) {
      it->second.line = line;
      it->second.column = column;
    }
    ++it->second.occurrences;
    return it->second;
  }

  VertexId hybrid_vertex(HybridUse& use) {
    if (use.vertex == kNoVertex) use.vertex = new_vertex();
    return use.vertex;
  }

  VertexId node() {
    skip_space();
    if (at_end()) fail(ErrorCode::SyntaxError, "unexpected end of input");
    const std::size_t line = line_, column = column_;

    std::vector<VertexId> children;
    bool internal = false;
    if (peek() == '(') {
      internal = true;
      advance();
      for (;;) {
        children.push_back(node());
        skip_space();
        if (!at_end() && peek() == ',') {
          advance();
          continue;
        }
        expect(')');
        break;
      }
    }
    skip_space();
    std::string name;
    if (!at_end() && (peek() == '\'' || !is_special(peek()))) name = label();
    skip_space();
    std::string tag;
    if (!at_end() && peek() == '#') tag = hybrid_tag();
    check_trailer();

    if (!internal && name.empty() && tag.empty()) {
      throw ParseError(ErrorCode::SyntaxError, "expected a taxon name, '(' or a hybrid tag", line,
                       column);
    }

    VertexId leaf = kNoVertex;
    if (!internal && !name.empty()) {
      leaf = new_vertex();
      labels_[leaf] = name;
    }
    if (tag.empty()) {
      if (internal) {
        VertexId v = new_vertex();
        for (VertexId c : children) edges_.push_back({v, c});
        return v;
      }
      return leaf;
    }

    HybridUse& use = use_of(tag, line, column);
    const bool defines = internal || leaf != kNoVertex;
    if (!defines) return hybrid_vertex(use);
    ++use.definitions;
    if (use.definitions > 1) {
      throw ParseError(ErrorCode::TagArityError, "hybrid tag #" + tag + " has two subtrees", line,
                       column);
    }
    VertexId h = hybrid_vertex(use);
    if (internal) {
      for (VertexId c : children) edges_.push_back({h, c});
    } else {
      edges_.push_back({h, leaf});
    }
    return h;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t start_line_ = line_;
  std::size_t column_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::map<std::string, HybridUse> hybrids_;
};

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

namespace detail {

std::string quote_label(std::string_view label) {
  const bool plain =
      !label.empty() && std::none_of(label.begin(), label.end(), [](char c) { return is_special(c); });
  if (plain) return std::string(label);
  std::string out = "'";
  for (char c : label) {
    if (c == '\'') out.push_back('\'');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

std::string write_newick(const PhyloNetwork& net, const std::vector<std::uint32_t>* rank) {
  std::vector<std::uint32_t> tag(net.vertex_count(), 0);
  std::uint32_t next_tag = 0;
  std::string out;

  struct Frame {
    VertexId v;
    std::array<VertexId, 2> children;
    std::uint8_t count;
    std::uint8_t next;
  };
  std::vector<Frame> stack;

  auto enter = [&](VertexId v) {
    if (net.is_leaf(v)) {
      out += quote_label(net.label(v));
      return;
    }
    if (net.is_reticulation(v) && tag[v] != 0) {
      out += "#H" + std::to_string(tag[v]);
      return;
    }
    if (net.is_reticulation(v)) tag[v] = ++next_tag;
    Frame f{v, {kNoVertex, kNoVertex}, 0, 0};
    for (EdgeId e : net.out_edges(v)) f.children[f.count++] = net.head(e);
    if (rank && f.count == 2 && (*rank)[f.children[1]] < (*rank)[f.children[0]]) {
      std::swap(f.children[0], f.children[1]);
    }
    out.push_back('(');
    stack.push_back(f);
  };

  enter(net.head(net.root_edge()));
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.count) {
      out.push_back(')');
      if (net.is_reticulation(f.v)) out += "#H" + std::to_string(tag[f.v]);
      stack.pop_back();
      continue;
    }
    if (f.next > 0) out.push_back(',');
    VertexId child = f.children[f.next++];
    enter(child);
  }
  out.push_back(';');
  return out;
}

}  // namespace detail

PhyloNetwork parse_enewick(std::string_view text) { return Parser(text, 1).parse(); }

std::vector<PhyloNetwork> parse_enewick_document(std::string_view text) {
  std::vector<PhyloNetwork> out;
  std::size_t line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    const bool blank = std::all_of(row.begin(), row.end(),
                                   [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back(Parser(row, line).parse());
    ++line;
    start = end + 1;
  }
  return out;
}

std::string write_enewick(const PhyloNetwork& net, bool canonical) {
  if (canonical) return canonical_form(net).key;
  return detail::write_newick(net, nullptr);
}

std::string write_dot(const PhyloNetwork& net) {
  std::string out = "digraph network {\n";
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    out += "  n" + std::to_string(v);
    switch (net.role(v)) {
      case VertexRole::Root:
        out += " [shape=point, label=\"\"];\n";
        break;
      case VertexRole::Leaf:
        out += " [shape=plaintext, label=\"" + dot_escape(net.label(v)) + "\"];\n";
        break;
      case VertexRole::InnerTree:
        out += " [shape=circle, label=\"\", width=0.15];\n";
        break;
      case VertexRole::Reticulation:
        out += " [shape=diamond, label=\"\", width=0.2, style=filled, fillcolor=gray];\n";
        break;
    }
  }
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    out += "  n" + std::to_string(net.tail(e)) + " -> n" + std::to_string(net.head(e));
    out += net.is_reticulation_edge(e) ? " [style=dashed];\n" : ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace snprnet
