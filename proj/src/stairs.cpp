#include "snc/stairs.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "snc/error.hpp"

namespace snc {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    fail(ErrorCode::InvalidParams, "bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::string pair_text(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

void CorankData::validate() const {
  if (n <= 0) fail(ErrorCode::InvalidParams, "dimension must be positive");
  if (n_seq.empty()) fail(ErrorCode::InvalidParams, "corank sequence is empty");
  int prev = 0;
  for (int v : n_seq) {
    if (v <= prev) fail(ErrorCode::InvalidParams, "corank sequence must be strictly increasing and positive");
    prev = v;
  }
  if (prev > n) fail(ErrorCode::InvalidParams, "n(r) exceeds the dimension");
  if (c <= 0 || c > n) fail(ErrorCode::InvalidParams, "boundary codimension must lie in [1, n]");
}

CorankData preset_sp(int g) {
  if (g <= 1) fail(ErrorCode::InvalidParams, "Sp preset needs g > 1");
  CorankData cd;
  cd.label = "sp:" + std::to_string(g);
  cd.n = g * (g + 1) / 2;
  for (int i = 1; i <= g; ++i) cd.n_seq.push_back(i * (i + 1) / 2);
  cd.c = g;
  cd.q_simple = true;
  return cd;
}

CorankData preset_o2n(int n) {
  if (n < 3) fail(ErrorCode::InvalidParams, "O(2,n) preset needs n >= 3");
  CorankData cd;
  cd.label = "o2n:" + std::to_string(n);
  cd.n = n;
  cd.n_seq = {1, n};
  cd.c = n - 1;
  cd.q_simple = true;
  return cd;
}

CorankData preset_u(int p, int q) {
  if (p < 1 || p > q) fail(ErrorCode::InvalidParams, "U(p,q) preset needs 1 <= p <= q");
  CorankData cd;
  cd.label = "u:" + std::to_string(p) + "," + std::to_string(q);
  cd.n = p * q;
  for (int i = 1; i <= p; ++i) cd.n_seq.push_back(i * i);
  cd.c = p + q - 1;
  cd.q_simple = true;
  return cd;
}

CorankData preset(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) fail(ErrorCode::InvalidParams, "preset must look like sp:2, o2n:5 or u:2,3");
  const std::string_view group = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  if (group == "sp") return preset_sp(parse_int(args, "genus"));
  if (group == "o2n") return preset_o2n(parse_int(args, "dimension"));
  if (group == "u") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) fail(ErrorCode::InvalidParams, "U preset must look like u:p,q");
    return preset_u(parse_int(args.substr(0, comma), "p"), parse_int(args.substr(comma + 1), "q"));
  }
  fail(ErrorCode::InvalidParams, "unknown preset group '" + std::string(group) + "'");
}

Region admissible_region(const CorankData& cd, int k) {
  cd.validate();
  if (k < 0) fail(ErrorCode::InvalidParams, "degree must be nonnegative");
  Region rg;
  rg.k = k;
  rg.n = cd.n;
  rg.bound = std::min(k, cd.n);
  const int nr = cd.n_at(cd.r());

  for (int p = 0; p <= rg.bound; ++p)
    for (int q = 0; q <= rg.bound; ++q) {
      auto& trace = rg.rule_trace[{p, q}];
      const int m = p + q - k;
      const int diff = std::abs(p - q);

      trace.push_back({"triangle", m >= 0, m >= 0 ? "p+q >= k: not excluded" : "p+q < k: excluded"});
      if (k < cd.c)
        trace.push_back({"purity", m == 0,
                         m == 0 ? "k < c and p+q = k: not excluded" : "k < c forces p+q = k: excluded"});
      if (m > 0 && m <= nr) {
        int i = 1;
        while (cd.n_at(i) < m) ++i;
        const int limit = cd.n - cd.n_at(i);
        const bool ok = diff <= limit;
        trace.push_back({"stairs", ok,
                         "n(" + std::to_string(i - 1) + ") < m <= n(" + std::to_string(i) + "), |p-q| = " +
                             std::to_string(diff) + (ok ? " <= " : " > ") + std::to_string(limit) +
                             (ok ? ": not excluded" : ": excluded")});
      }
      if (m > 0)
        trace.push_back({"vacuum", m <= nr,
                         m <= nr ? "m <= n(r): not excluded" : "m > n(r): excluded"});
      if (k < cd.n) {
        const bool roof = (p == k && q > 0) || (q == k && p > 0);
        trace.push_back({"roof", !roof,
                         roof ? pair_text(p, q) + " lies on the roof and k < n: excluded"
                              : "off the roof: not excluded"});
      }
      if (std::all_of(trace.begin(), trace.end(), [](const RuleCheck& r) { return r.passed; }))
        rg.admissible.insert({p, q});
    }
  return rg;
}

namespace {

std::string render_ascii(const Region& rg) {
  const int b = rg.bound;
  std::ostringstream out;
  out << "k=" << rg.k << " n=" << rg.n << "  (* not excluded, . excluded, : excluded on the roof)\n";
  const int width = 2 * b + 1;
  for (int w = 2 * b; w >= rg.k; --w) {
    std::string line(static_cast<std::size_t>(2 * width), ' ');
    for (int p = 0; p <= b; ++p) {
      const int q = w - p;
      if (q < 0 || q > b) continue;
      const auto col = static_cast<std::size_t>(2 * (p - q + b));
      const bool roof = p == b || q == b;
      line[col] = rg.contains(p, q) ? '*' : (roof ? ':' : '.');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::string label = std::to_string(w);
    out << std::string(3 - std::min<std::size_t>(3, label.size()), ' ') << label << " | " << line << '\n';
  }
  out << "    +" << std::string(static_cast<std::size_t>(2 * width), '-') << '\n';
  return out.str();
}

std::string render_svg(const Region& rg) {
  const int b = rg.bound;
  const int s = 30, margin = 30;
  const int width = 2 * b * s + 2 * margin;
  const int height = std::max(0, 2 * b - rg.k) * s + 2 * margin;
  auto x_of = [&](int p, int q) { return margin + (p - q + b) * s; };
  auto y_of = [&](int p, int q) { return margin + (2 * b - (p + q)) * s; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<title>k=" << rg.k << " n=" << rg.n << "</title>\n";
  // Bottom line p+q=k, clipped to the box.
  const int lo = std::max(0, rg.k - b), hi = std::min(b, rg.k);
  if (lo <= hi)
    out << "<line x1=\"" << x_of(lo, rg.k - lo) << "\" y1=\"" << y_of(lo, rg.k - lo) << "\" x2=\"" << x_of(hi, rg.k - hi)
        << "\" y2=\"" << y_of(hi, rg.k - hi) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  // Dotted roof p = bound and q = bound.
  if (rg.k - b <= b) {
    out << "<line x1=\"" << x_of(b, std::max(0, rg.k - b)) << "\" y1=\"" << y_of(b, std::max(0, rg.k - b))
        << "\" x2=\"" << x_of(b, b) << "\" y2=\"" << y_of(b, b) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
    out << "<line x1=\"" << x_of(std::max(0, rg.k - b), b) << "\" y1=\"" << y_of(std::max(0, rg.k - b), b)
        << "\" x2=\"" << x_of(b, b) << "\" y2=\"" << y_of(b, b) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  }
  for (const auto& [p, q] : rg.admissible)
    out << "<circle cx=\"" << x_of(p, q) << "\" cy=\"" << y_of(p, q) << "\" r=\"6\" fill=\"black\"><title>(" << p
        << "," << q << ")</title></circle>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_region(const Region& rg, RenderFormat format) {
  return format == RenderFormat::Svg ? render_svg(rg) : render_ascii(rg);
}

}  // namespace snc
