#include "ibb/render.hpp"

#include <sstream>
#include <vector>

namespace ibb {

std::string render_text(const SignedPartialPerm& a) {
  std::ostringstream os;
  for (int j = 1; j <= a.rank(); ++j) {
    if (auto t = a.image_of(j)) {
      os << j << " --(" << (t->sign > 0 ? '+' : '-') << ")--> " << t->index << '\n';
    } else {
      os << j << " - - - -  (deleted)\n";
    }
  }
  return os.str();
}

std::string render_dot(const SignedPartialPerm& a) {
  const int n = a.rank();
  std::vector<bool> target_used(static_cast<size_t>(n) + 1, false);
  for (int j = 1; j <= n; ++j)
    if (auto t = a.image_of(j)) target_used[static_cast<size_t>(t->index)] = true;

  std::ostringstream os;
  os << "digraph strands {\n";
  os << "  rankdir=TB;\n";
  os << "  { rank=source;";
  for (int j = 1; j <= n; ++j) os << " t" << j << ';';
  os << " }\n";
  os << "  { rank=sink;";
  for (int j = 1; j <= n; ++j) os << " b" << j << ';';
  os << " }\n";
  for (int j = 1; j <= n; ++j) {
    os << "  t" << j << " [label=\"" << j << "\"";
    if (!a.defined_at(j)) os << ", style=dashed";
    os << "];\n";
  }
  for (int j = 1; j <= n; ++j) {
    os << "  b" << j << " [label=\"" << j << "'\"";
    if (!target_used[static_cast<size_t>(j)]) os << ", style=dashed";
    os << "];\n";
  }
  for (int j = 1; j <= n; ++j) {
    if (auto t = a.image_of(j)) {
      os << "  t" << j << " -> b" << t->index << " [label=\""
         << (t->sign > 0 ? '+' : '-') << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ibb
