#include "bitprobe/fixtures.hpp"

#include <stdexcept>

namespace bitprobe::fixtures {

namespace {

std::vector<SetRecord> layout_table(Table t, const std::string& blocks, const std::vector<std::string>& layout) {
  std::vector<SetRecord> out;
  for (std::size_t k = 0; k < layout.size(); ++k) {
    const int index = static_cast<int>(k) + 1;
    SetRecord rec{t, 0, index, {}};
    auto flush = [&] {
      if (rec.members.empty()) return;
      rec.bit = static_cast<int>(out.size());
      out.push_back(rec);
      rec.members.clear();
    };
    for (char ch : layout[k]) {
      if (ch == '|') {
        flush();
        continue;
      }
      auto pos = blocks.find(ch);
      if (pos == std::string::npos) throw std::invalid_argument(std::string("unknown block '") + ch + "'");
      rec.members.push_back({static_cast<BlockId>(pos), index});
    }
    flush();
  }
  return out;
}

}  // namespace

Scheme from_layout(const std::string& blocks, const std::vector<std::string>& layout_b,
                   const std::vector<std::string>& layout_c) {
  if (layout_b.size() != layout_c.size()) throw std::invalid_argument("tables disagree on the block size");
  const int s = static_cast<int>(blocks.size());
  const int b = static_cast<int>(layout_b.size());
  std::vector<std::string> names;
  for (char ch : blocks) names.emplace_back(1, ch);
  return Scheme(s * b, s, b, std::move(names), layout_table(Table::B, blocks, layout_b),
                layout_table(Table::C, blocks, layout_c));
}

Scheme toy3() {
  std::vector<std::string> all(4, "abc");
  return from_layout("abc", all, all);
}

Scheme fig1c() {
  const std::string pairs = "ab|cd|ef|gh";
  std::vector<std::string> b(8, pairs), c(8, pairs);
  b[0] = "ab|cd|ef|gh";     // V = {a1, b1}
  b[2] = "cf|deg|abh";      // W, X, then a, b, h left over
  c[1] = "bcde|af|gh";      // Y
  c[3] = "gh|ab|cd|ef";     // Z
  return from_layout("abcdefgh", b, c);
}

Scheme fig1c_good() {
  const std::string pairs = "ab|cd|ef|gh";
  std::vector<std::string> b(8, pairs), c(8, pairs);
  b[2] = "ab|cf|dg|eh";
  c[1] = "bcde|af|gh";
  c[3] = "gh|ab|cd|ef";
  return from_layout("abcdefgh", b, c);
}

Scheme dbl() {
  std::vector<std::string> b(8, "abc|de"), c(8, "ad|bce");
  c[1] = "abc|de";  // b2, c2 share a C set: a1 is 1-bad w.r.t. B
  b[1] = "ad|bce";
  c[2] = "ade|bc";  // a3 reaches d4, e4
  b[3] = "de|abc";  // ... which share a B set: a3 is 1-bad w.r.t. C
  return from_layout("abcde", b, c);
}

}  // namespace bitprobe::fixtures
