#include "nilc/reference_rows.hpp"

namespace nilc {

namespace {

std::string pw(int base, int exp) {
  if (exp == 1) return std::to_string(base);
  return std::to_string(base) + "^" + std::to_string(exp);
}

std::string partition(std::initializer_list<std::pair<int, int>> parts, const std::string& tag = "") {
  std::string s = "(";
  bool first = true;
  for (auto [b, e] : parts) {
    if (e <= 0) continue;
    if (!first) s += ", ";
    s += pw(b, e);
    first = false;
  }
  return s + ")" + tag;
}

std::string family(char letter, int k, int alpha) {
  return "(" + std::string(1, letter) + std::to_string(k) + ", alpha_" + std::to_string(alpha) + ")";
}

ReferenceRow row(std::initializer_list<int> ones_at, int value, int r,
                 std::string label) {
  ReferenceRow x;
  for (int p : ones_at) x.diagram[p - 1] = value;
  x.rank_r = r;
  x.label = std::move(label);
  return x;
}

ReferenceRow fixed(const std::string& digits, int r, std::string label) {
  ReferenceRow x;
  for (std::size_t i = 0; i < digits.size(); ++i) x.diagram[i] = digits[i] - '0';
  x.rank_r = r;
  x.label = std::move(label);
  return x;
}

}  // namespace

std::vector<ReferenceRow> reference_rows(const CartanType& t) {
  const int n = t.rank;
  std::vector<ReferenceRow> rows;
  auto add = [&](ReferenceRow x, const std::string& g0l) {
    x.label += "  " + g0l;
    rows.push_back(std::move(x));
  };
  switch (t.letter) {
    case 'A':
      for (int r = 1; 2 * r <= n; ++r) {
        int l = n - 2 * r;
        add(row({r, r + l + 1}, 1, r, partition({{2, r}, {1, l + 1}})), family('A', 2 * r - 1, r));
      }
      if (n % 2 == 1) {
        int r = (n + 1) / 2;
        add(row({r}, 2, r, partition({{2, r}})), family('A', 2 * r - 1, r));
      }
      break;
    case 'B':
      add(row({1}, 2, 2, partition({{3, 1}, {1, 2 * (n - 1)}})), family('B', n, 1));
      for (int r = 1; 2 * r <= n; ++r) {
        int l = n - 2 * r;
        add(row({2 * r}, 1, r, partition({{2, 2 * r}, {1, 2 * l + 1}})), family('D', 2 * r, 2 * r));
      }
      break;
    case 'C':
      for (int r = 1; r + 1 <= n; ++r) {
        int l = n - r - 1;
        add(row({r}, 1, r, partition({{2, r}, {1, 2 * l + 2}})), family('C', r, r));
      }
      add(row({n}, 2, n, partition({{2, n}})), family('C', n, n));
      break;
    case 'D':
      add(row({1}, 2, 2, partition({{3, 1}, {1, 2 * n - 3}})), family('D', n, 1));
      for (int r = 1; 2 * r + 2 <= n; ++r) {
        int l = n - 2 * r - 2;
        add(row({2 * r}, 1, r, partition({{2, 2 * r}, {1, 2 * l + 4}})), family('D', 2 * r, 2 * r));
      }
      if (n % 2 == 1) {
        int r = (n - 1) / 2;
        add(row({n - 1, n}, 1, r, partition({{2, 2 * r}, {1, 2}})), family('D', 2 * r, 2 * r));
      } else {
        int r = n / 2;
        add(row({n}, 2, r, partition({{2, 2 * r}}, " I")), family('D', 2 * r, 2 * r));
        add(row({n - 1}, 2, r, partition({{2, 2 * r}}, " II")), family('D', 2 * r, 2 * r));
      }
      break;
    case 'E':
      if (n == 6) {
        add(fixed("010000", 1, "A1"), family('A', 1, 1));
        add(fixed("100001", 2, "2A1"), family('D', 5, 1));
      } else if (n == 7) {
        add(fixed("1000000", 1, "A1"), family('A', 1, 1));
        add(fixed("0000010", 2, "2A1"), family('D', 6, 1));
        add(fixed("0000002", 3, "3A1''"), family('E', 7, 7));
      } else {
        add(fixed("00000001", 1, "A1"), family('A', 1, 1));
        add(fixed("10000000", 2, "2A1"), family('D', 8, 1));
      }
      break;
    case 'F':
      add(fixed("1000", 1, "A1"), family('A', 1, 1));
      add(fixed("0001", 2, "~A1"), family('B', 4, 1));
      break;
    case 'G':
      add(fixed("01", 1, "A1"), family('A', 1, 1));
      break;
  }
  return rows;
}

}  // namespace nilc
