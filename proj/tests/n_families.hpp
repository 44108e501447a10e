#pragma once
// Parametrised families of 5 x 5 binary matrices of determinant +-3, as
// printed alongside the order-5 classification. Each family maps six 0/1
// parameters to a matrix, or to nothing when the side condition fails.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "unilift/gf2.hpp"

namespace nfam {

using Params = std::array<int, 6>;
using Rows = std::array<std::array<int, 5>, 5>;

struct Family {
  std::string name;
  std::function<std::optional<Rows>(const Params&)> make;
};

inline unilift::BinaryMatrix to_binary(const Rows& r) {
  unilift::BinaryMatrix m(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m.set(i, j, r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0);
  return m;
}

// parameters p[0..3] are n1..n4; p[4], p[5] are the x or y entries
inline std::vector<Family> families() {
  std::vector<Family> f;
  const auto fixed = [](Rows r) { return [r](const Params& p) -> std::optional<Rows> {
    if (p != Params{}) return std::nullopt;  // one instance only
    return r;
  }; };
  f.push_back({"N1a", [](const Params& p) -> std::optional<Rows> {
    if (p[4] || p[5]) return std::nullopt;
    return Rows{{{1, 1, 1, 0, 0}, {1, 1, 0, 1, 0}, {1, 0, 1, 1, 0}, {0, 1, 1, 1, 0}, {p[0], p[1], p[2], p[3], 1}}};
  }});
  f.push_back({"N1b", [](const Params& p) -> std::optional<Rows> {
    if (p[4] || p[5]) return std::nullopt;
    return Rows{{{1, 1, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 0}, {p[0], p[1], p[2], p[3], 1}}};
  }});
  f.push_back({"N2a", [](const Params& p) -> std::optional<Rows> {
    if (p[4] || p[5] || p[0] + 2 * p[3] != p[1] + p[2]) return std::nullopt;
    return Rows{{{1, 1, 1, 0, 1}, {1, 1, 0, 1, 0}, {1, 0, 1, 1, 0}, {0, 1, 1, 1, 0}, {p[0], p[1], p[2], p[3], 1}}};
  }});
  f.push_back({"N2b", [](const Params& p) -> std::optional<Rows> {
    if (p[4] || p[5] || p[0] + p[1] + p[2] != p[3]) return std::nullopt;
    return Rows{{{1, 1, 1, 0, 1}, {1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 0}, {p[0], p[1], p[2], p[3], 1}}};
  }});
  f.push_back({"N2c", [](const Params& p) -> std::optional<Rows> {
    if (p[4] || p[5] || p[0] + p[1] != 2 * p[2] + p[3]) return std::nullopt;
    return Rows{{{1, 1, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}, {p[0], p[1], p[2], p[3], 1}}};
  }});
  f.push_back({"N3a", fixed(Rows{{{1, 1, 1, 1, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}, {1, 0, 0, 0, 1}}})});
  // N3b..N3d use n3 = p[2], n4 = p[3], x2 = p[4], x3 = p[5]
  f.push_back({"N3b", [](const Params& p) -> std::optional<Rows> {
    if (p[0] || p[1] || p[4] + p[5] != p[2] + p[3]) return std::nullopt;
    return Rows{{{1, 0, p[4], p[5], 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}, {1, 1, p[2], p[3], 1}}};
  }});
  f.push_back({"N3c", [](const Params& p) -> std::optional<Rows> {
    if (p[0] || p[1] || p[4] + p[5] != p[2] + p[3] + 1) return std::nullopt;
    return Rows{{{1, 0, p[4], p[5], 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}, {1, 0, p[2], p[3], 1}}};
  }});
  f.push_back({"N3d", [](const Params& p) -> std::optional<Rows> {
    if (p[0] || p[1] || p[4] + p[5] != p[2] + p[3] + 1) return std::nullopt;
    return Rows{{{1, 1, p[4], p[5], 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}, {1, 1, p[2], p[3], 1}}};
  }});
  f.push_back({"N4a", fixed(Rows{{{1, 1, 1, 1, 1}, {1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}, {1, 0, 0, 0, 1}}})});
  f.push_back({"N4b", [](const Params& p) -> std::optional<Rows> {
    if (p[4] || p[5] || p[0] + p[3] + 1 != p[1] + p[2]) return std::nullopt;
    return Rows{{{1, 1, 1, 1, 0}, {1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 0, 0, 1, 1}, {p[0], p[1], p[2], p[3], 1}}};
  }});
  f.push_back({"N5a", [](const Params& p) -> std::optional<Rows> {
    if (p[1] || p[2] || p[3] || p[4] || p[5]) return std::nullopt;
    return Rows{{{1, 1, 1, 0, 1}, {1, 1, 0, 1, 0}, {1, 0, 1, 1, 0}, {1, 0, 0, 0, 0}, {p[0], 0, 0, 0, 1}}};
  }});
  f.push_back({"N5b", fixed(Rows{{{1, 1, 1, 0, 0}, {1, 1, 0, 1, 0}, {1, 0, 1, 1, 0}, {1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}}})});
  f.push_back({"N5c", fixed(Rows{{{1, 1, 1, 0, 0}, {1, 1, 0, 1, 0}, {1, 0, 1, 1, 0}, {1, 0, 0, 0, 1}, {1, 1, 1, 1, 1}}})});
  f.push_back({"N6a", [](const Params& p) -> std::optional<Rows> {
    if (p[0] || p[1] || p[2] || p[4] || p[5]) return std::nullopt;
    return Rows{{{1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {0, 1, 1, 1, 1}, {0, 0, 0, 1, 0}, {1, 0, 0, p[3], 1}}};
  }});
  f.push_back({"N6b", [](const Params& p) -> std::optional<Rows> {
    if (p[3] || p[4] || p[5] || p[0] + 1 != p[1] + p[2]) return std::nullopt;
    return Rows{{{1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 1, 1}, {p[0], p[1], p[2], 0, 1}}};
  }});
  // N7a, N7b use y1 = p[4], y2 = p[5]
  f.push_back({"N7a", [](const Params& p) -> std::optional<Rows> {
    if ((p[1] - p[2] - p[3]) + (p[4] + p[5]) * (p[0] - p[1]) != 1) return std::nullopt;
    return Rows{{{1, 0, p[4], p[5], 0}, {1, 1, 1, 0, 0}, {1, 1, 0, 1, 0}, {0, 0, 1, 1, 1}, {p[0], p[1], p[2], p[3], 1}}};
  }});
  f.push_back({"N7b", [](const Params& p) -> std::optional<Rows> {
    if ((p[2] - p[1] - p[3]) + (p[5] - p[4]) * (p[0] - p[1]) != 1) return std::nullopt;
    return Rows{{{1, 0, p[4], p[5], 0}, {1, 1, 1, 0, 0}, {1, 1, 0, 1, 1}, {0, 0, 1, 1, 0}, {p[0], p[1], p[2], p[3], 1}}};
  }});
  f.push_back({"N8a", [](const Params& p) -> std::optional<Rows> {
    if (p[4] || p[5] || p[0] + p[1] != 2 * p[2] + 2 * p[3]) return std::nullopt;
    return Rows{{{1, 1, 1, 0, 0}, {1, 1, 0, 1, 0}, {1, 0, 1, 1, 1}, {0, 1, 1, 1, 1}, {p[0], p[1], p[2], p[3], 1}}};
  }});
  f.push_back({"N8b", fixed(Rows{{{1, 1, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}, {0, 0, 1, 1, 1}, {1, 1, 1, 0, 1}}})});
  f.push_back({"N9a", fixed(Rows{{{1, 0, 0, 0, 0}, {1, 1, 1, 1, 0}, {1, 1, 1, 0, 1}, {1, 1, 0, 1, 1}, {1, 0, 1, 1, 1}}})});
  f.push_back({"N9b", [](const Params& p) -> std::optional<Rows> {
    if (p[3] || p[4] || p[5]) return std::nullopt;
    return Rows{{{p[0], p[1], p[2], 1, 0}, {1, 1, 1, 0, 0}, {1, 1, 0, 1, 1}, {1, 0, 1, 1, 1}, {0, 1, 1, 1, 1}}};
  }});
  return f;
}

template <class Fn>
void for_each_instance(const Family& fam, Fn&& fn) {
  for (int bits = 0; bits < 64; ++bits) {
    Params p{};
    for (int i = 0; i < 6; ++i) p[static_cast<std::size_t>(i)] = (bits >> i) & 1;
    if (auto r = fam.make(p)) fn(p, to_binary(*r));
  }
}

}  // namespace nfam
