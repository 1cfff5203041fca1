#include "zel/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace zel {

namespace {

struct Mark {
  const Segment* seg;
  char glyph;
};

class Grid {
 public:
  explicit Grid(const std::vector<std::vector<Mark>>& rows) : rows_(rows) {
    bool any = false;
    bool has_int = false;
    bool has_half = false;
    for (const auto& row : rows_) {
      for (const auto& m : row) {
        lo_ = any ? std::min(lo_, m.seg->begin()) : m.seg->begin();
        hi_ = any ? std::max(hi_, m.seg->end()) : m.seg->end();
        any = true;
        (m.seg->begin().is_integer() ? has_int : has_half) = true;
      }
    }
    empty_ = !any;
    step_ = has_int && has_half ? 1 : 2;  // in units of 1/2
  }

  std::string str() const {
    if (empty_) return "";
    const std::int64_t cols = (hi_.twice() - lo_.twice()) / step_ + 1;
    std::vector<std::string> labels;
    std::size_t width = 1;
    for (std::int64_t c = 0; c < cols; ++c) {
      labels.push_back(HalfExp::from_twice(lo_.twice() + c * step_).to_string());
      width = std::max(width, labels.back().size());
    }

    std::string out;
    auto emit = [&](const std::vector<std::string>& cells) {
      std::string line;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) line += ' ';
        line += std::string(width - cells[c].size(), ' ') + cells[c];
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out += line;
      out += '\n';
    };

    emit(labels);
    for (const auto& row : rows_) {
      std::vector<std::string> cells(cols, "");
      for (const auto& m : row) {
        for (HalfExp x = m.seg->begin(); x <= m.seg->end(); x = x + 1) {
          cells[(x.twice() - lo_.twice()) / step_] = std::string(1, m.glyph);
        }
      }
      emit(cells);
    }
    return out;
  }

 private:
  std::vector<std::vector<Mark>> rows_;
  HalfExp lo_;
  HalfExp hi_;
  std::int64_t step_ = 2;
  bool empty_ = true;
};

}  // namespace

std::string render_diagram(const Multisegment& a) {
  std::vector<std::vector<Mark>> rows;
  for (const auto& s : a) rows.push_back({{&s, '*'}});
  return Grid(rows).str();
}

std::string render_diagram(const SpehPairParams& p) {
  const int n = p.n;
  int shift = n;
  if (p.k >= p.d && p.k - p.d < n) shift = p.k - p.d;

  std::vector<std::vector<Mark>> rows(std::max(n, shift + n));
  for (int i = 0; i < n; ++i) rows[i].push_back({&p.lower[i], '*'});
  for (int i = 0; i < n; ++i) rows[i + shift].push_back({&p.upper[i], 'o'});
  return Grid(rows).str();
}

}  // namespace zel
