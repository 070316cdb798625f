#include "fixerlab/groupio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fixerlab {

namespace {

std::string_view trim(std::string_view s) {
  const char *ws = " \t\r\n";
  auto a = s.find_first_not_of(ws);
  if (a == std::string_view::npos) return {};
  auto b = s.find_last_not_of(ws);
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(size_t line, const std::string &msg) {
  throw GroupIOError("line " + std::to_string(line) + ": " + msg);
}

uint64_t parse_uint(std::string_view s, size_t line) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) fail(line, "expected a number, got '" + std::string(s) + "'");
  return v;
}

Perm check_images(std::vector<uint64_t> one_based, size_t n, size_t line) {
  if (one_based.size() != n) fail(line, "expected " + std::to_string(n) + " images, got " + std::to_string(one_based.size()));
  std::vector<Point> img(n);
  std::vector<bool> hit(n, false);
  for (size_t i = 0; i < n; ++i) {
    uint64_t v = one_based[i];
    if (v < 1 || v > n) fail(line, "image " + std::to_string(v) + " out of range");
    if (hit[v - 1]) fail(line, "repeated image " + std::to_string(v));
    hit[v - 1] = true;
    img[i] = Point(v - 1);
  }
  return Perm(std::move(img));
}

Perm parse_images(std::string_view s, size_t n, size_t line) {
  std::vector<uint64_t> v;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',') ++j;
    if (j > i) v.push_back(parse_uint(s.substr(i, j - i), line));
    i = j;
  }
  return check_images(std::move(v), n, line);
}

Perm parse_cycles(std::string_view s, size_t n, size_t line) {
  std::vector<uint64_t> img(n);
  std::iota(img.begin(), img.end(), uint64_t(1));
  std::vector<bool> moved(n, false);
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    if (s[i] != '(') fail(line, "expected '('");
    auto close = s.find(')', i);
    if (close == std::string_view::npos) fail(line, "unclosed cycle");
    std::vector<uint64_t> c;
    std::string_view body = s.substr(i + 1, close - i - 1);
    size_t k = 0;
    while (k <= body.size()) {
      size_t e = body.find(',', k);
      if (e == std::string_view::npos) e = body.size();
      auto tok = trim(body.substr(k, e - k));
      if (!tok.empty()) c.push_back(parse_uint(tok, line));
      k = e + 1;
    }
    for (size_t t = 0; t < c.size(); ++t) {
      if (c[t] < 1 || c[t] > n) fail(line, "point " + std::to_string(c[t]) + " out of range");
      if (moved[c[t] - 1]) fail(line, "point " + std::to_string(c[t]) + " repeated");
      moved[c[t] - 1] = true;
      img[c[t] - 1] = c[(t + 1) % c.size()];
    }
    i = close + 1;
  }
  return check_images(std::move(img), n, line);
}

}  // namespace

GroupFile parse_group_file(std::string_view text) {
  GroupFile f;
  bool have_degree = false;
  size_t line = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t e = text.find('\n', pos);
    if (e == std::string_view::npos) e = text.size();
    std::string_view raw = text.substr(pos, e - pos);
    pos = e + 1;
    ++line;
    auto s = trim(raw);
    if (s.empty()) continue;
    if (s[0] == '#') {
      f.comments.emplace_back(trim(s.substr(1)));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(s[0]))) {
      auto sp = s.find_first_of(" \t");
      std::string_view key = s.substr(0, sp), val = sp == std::string_view::npos ? "" : trim(s.substr(sp));
      if (!f.gens.empty()) fail(line, "header after permutations");
      if (key == "degree") {
        f.degree = parse_uint(val, line);
        if (f.degree == 0 || f.degree > 65535) fail(line, "degree out of range");
        have_degree = true;
      } else if (key == "name") {
        f.name = std::string(val);
      } else if (key == "order") {
        f.order = parse_uint(val, line);
      } else if (key == "format") {
        if (val == "cycles") f.cycles = true;
        else if (val == "images") f.cycles = false;
        else fail(line, "unknown format '" + std::string(val) + "'");
      } else {
        fail(line, "unknown header '" + std::string(key) + "'");
      }
      continue;
    }
    if (!have_degree) fail(line, "permutation before 'degree'");
    f.gens.push_back(f.cycles ? parse_cycles(s, f.degree, line) : parse_images(s, f.degree, line));
  }
  if (!have_degree) throw GroupIOError("missing 'degree' header");
  return f;
}

std::string serialize_group(const GroupFile &f) {
  std::ostringstream o;
  for (const auto &c : f.comments) o << "# " << c << '\n';
  o << "degree " << f.degree << '\n';
  if (!f.name.empty()) o << "name " << f.name << '\n';
  if (f.order) o << "order " << *f.order << '\n';
  if (f.cycles) o << "format cycles\n";
  for (const auto &g : f.gens) {
    if (f.cycles) {
      bool any = false;
      for (const auto &c : g.cycles()) {
        if (c.size() < 2) continue;
        any = true;
        o << '(';
        for (size_t i = 0; i < c.size(); ++i) o << (i ? "," : "") << c[i] + 1;
        o << ')';
      }
      if (!any) o << "()";
    } else {
      for (size_t i = 0; i < g.degree(); ++i) o << (i ? " " : "") << g[i] + 1;
    }
    o << '\n';
  }
  return o.str();
}

GroupFile load_group_file(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw GroupIOError("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_group_file(ss.str());
  } catch (const GroupIOError &e) {
    throw GroupIOError(p.string() + ": " + e.what());
  }
}

uint64_t closure_order(const GroupFile &f) {
  if (f.gens.empty()) return 1;
  return StabChain(f.degree, f.gens).order();
}

void verify_order(const GroupFile &f) {
  if (!f.order) return;
  uint64_t got = closure_order(f);
  if (got != *f.order)
    throw GroupIOError((f.name.empty() ? std::string("group") : f.name) + ": declared order " +
                       std::to_string(*f.order) + ", closure has order " + std::to_string(got));
}

Registry::Registry(std::filesystem::path root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) return;
  std::vector<fs::path> paths;
  for (const auto &e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file() && e.path().extension() == ".grp") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  for (const auto &p : paths) {
    GroupFile f = load_group_file(p);
    auto rel = fs::relative(p.parent_path(), root);
    std::string name = f.name.empty() ? p.stem().string() : f.name;
    if (!rel.empty() && rel != ".") name = rel.generic_string() + "/" + name;
    files_[name] = std::move(f);
  }
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const auto &[k, v] : files_) out.push_back(k);
  return out;
}

namespace {

std::optional<GroupFile> builtin(const std::string &name) {
  if (name.size() < 2 || (name[0] != 'A' && name[0] != 'S')) return std::nullopt;
  uint64_t n = 0;
  auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc() || p != name.data() + name.size() || n < 2 || n > 12) return std::nullopt;
  GroupFile f;
  f.degree = n;
  f.name = name;
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point(0));
  if (name[0] == 'S') {
    f.gens = {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {all})};
  } else {
    if (n < 3) return std::nullopt;
    for (Point k = 2; k < n; ++k) f.gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
  }
  uint64_t fact = 1;
  for (uint64_t i = 2; i <= n; ++i) fact *= i;
  f.order = name[0] == 'S' ? fact : fact / 2;
  return f;
}

}  // namespace

bool Registry::has(const std::string &name) const { return files_.count(name) || builtin(name).has_value(); }

const GroupFile &Registry::file(const std::string &name) const {
  auto it = files_.find(name);
  if (it != files_.end()) return it->second;
  if (auto b = builtin(name)) {
    static std::map<std::string, GroupFile> cache;
    static std::mutex mu;
    std::lock_guard lk(mu);
    return cache.try_emplace(name, *b).first->second;
  }
  throw GroupIOError("unknown group '" + name + "'");
}

PermGroup Registry::lookup(const std::string &name) const {
  const GroupFile &f = file(name);
  PermGroup G(f.degree, f.gens);
  G.enumerate();
  if (f.order && G.order() != *f.order)
    throw GroupIOError(name + ": declared order " + std::to_string(*f.order) + ", closure has order " +
                       std::to_string(G.order()));
  return G;
}

void Registry::add(const std::string &name, GroupFile f) {
  verify_order(f);
  files_[name] = std::move(f);
}

}  // namespace fixerlab
