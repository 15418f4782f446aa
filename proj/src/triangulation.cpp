#include "z2tri/triangulation.hpp"

#include <charconv>
#include <deque>
#include <sstream>

namespace z2tri {

int Triangulation::add_tetrahedron() {
  gluings_.emplace_back();
  return static_cast<int>(gluings_.size()) - 1;
}

void Triangulation::join(int tet, int face, int other, Perm4 perm) {
  const int other_face = perm[face];
  if (tet == other && face == other_face)
    throw Error(ErrorKind::FaceGluedToItself,
                "face " + std::to_string(face) + " of tetrahedron " + std::to_string(tet));
  auto& mine = gluings_.at(tet).at(face);
  auto& theirs = gluings_.at(other).at(other_face);
  if (mine || theirs)
    throw Error(ErrorKind::NonInvolutiveGluing, "join onto a face that is already glued");
  mine = Gluing{other, perm};
  theirs = Gluing{tet, perm.inverse()};
}

void Triangulation::unjoin(int tet, int face) {
  auto& mine = gluings_.at(tet).at(face);
  if (!mine) return;
  gluings_.at(mine->tet).at(mine->perm[face]).reset();
  mine.reset();
}

bool Triangulation::is_closed() const { return boundary_face_count() == 0; }

std::size_t Triangulation::boundary_face_count() const {
  std::size_t n = 0;
  for (const auto& tet : gluings_)
    for (const auto& g : tet)
      if (!g) ++n;
  return n;
}

void Triangulation::validate() const {
  const int n = static_cast<int>(size());
  for (int i = 0; i < n; ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = gluings_[i][f];
      if (!g) continue;
      const std::string where = "t" + std::to_string(i) + " face " + std::to_string(f);
      if (g->tet < 0 || g->tet >= n)
        throw Error(ErrorKind::IndexOutOfRange, where + " targets tetrahedron " + std::to_string(g->tet));
      if (g->tet == i && g->perm[f] == f) throw Error(ErrorKind::FaceGluedToItself, where);
      const auto& back = gluings_[g->tet][g->perm[f]];
      if (!back || back->tet != i || back->perm != g->perm.inverse())
        throw Error(ErrorKind::NonInvolutiveGluing, where + " is not matched by its partner");
    }
  }
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long> parse_index(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

[[noreturn]] void syntax_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Triangulation parse_triangulation(std::string_view text) {
  struct Line {
    std::size_t number;
    std::string_view content;
  };
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!split_ws(line).empty()) lines.push_back({line_no, line});
    pos = end + 1;
  }

  if (lines.empty()) syntax_error(line_no, "missing header 'tri v1 <tet_count>'");
  auto header = split_ws(lines[0].content);
  if (header.size() != 3 || header[0] != "tri" || header[1] != "v1")
    syntax_error(lines[0].number, "expected header 'tri v1 <tet_count>'");
  auto count = parse_index(header[2]);
  if (!count) syntax_error(lines[0].number, "bad tetrahedron count");
  const long n = *count;
  if (static_cast<long>(lines.size()) - 1 != n)
    syntax_error(lines.back().number, "expected " + std::to_string(n) + " tetrahedron lines, found " +
                                          std::to_string(lines.size() - 1));

  Triangulation t(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const auto& line = lines[i + 1];
    auto tokens = split_ws(line.content);
    const std::string label = "t" + std::to_string(i) + ":";
    if (tokens.size() != 5) syntax_error(line.number, "expected '" + label + " g0 g1 g2 g3'");
    if (tokens[0] != label) syntax_error(line.number, "expected label '" + label + "'");
    for (int f = 0; f < 4; ++f) {
      std::string_view tok = tokens[f + 1];
      if (tok == "-") continue;
      auto slash = tok.find('/');
      if (slash == std::string_view::npos) syntax_error(line.number, "bad gluing '" + std::string(tok) + "'");
      auto target = parse_index(tok.substr(0, slash));
      auto perm = Perm4::parse(tok.substr(slash + 1));
      if (!target || !perm) syntax_error(line.number, "bad gluing '" + std::string(tok) + "'");
      if (*target >= n)
        throw Error(ErrorKind::IndexOutOfRange, "line " + std::to_string(line.number) + ": tetrahedron " +
                                                    std::to_string(*target) + " does not exist");
      t.gluings_[i][f] = Gluing{static_cast<int>(*target), *perm};
    }
  }
  t.validate();
  return t;
}

std::string serialize(const Triangulation& t) {
  std::ostringstream out;
  out << "tri v1 " << t.size() << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << 't' << i << ':';
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(static_cast<int>(i), f);
      out << ' ';
      if (g)
        out << g->tet << '/' << g->perm.str();
      else
        out << '-';
    }
    out << '\n';
  }
  return out.str();
}

OrientationResult orient(const Triangulation& t) {
  const int n = static_cast<int>(t.size());
  OrientationResult result;
  result.assignment.sign.assign(n, 0);
  auto& sign = result.assignment.sign;
  // Face slot used to first reach each tetrahedron (tet = -1 for roots).
  std::vector<FaceSlot> parent(n);

  auto path_to_root = [&](int tet) {
    std::vector<FaceSlot> path;
    while (parent[tet].tet >= 0) {
      path.push_back(parent[tet]);
      tet = parent[tet].tet;
    }
    return path;
  };

  for (int root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int tet = queue.front();
      queue.pop_front();
      for (int f = 0; f < 4; ++f) {
        const auto& g = t.gluing(tet, f);
        if (!g) continue;
        const int want = -sign[tet] * g->perm.sign();
        if (sign[g->tet] == 0) {
          sign[g->tet] = want;
          parent[g->tet] = FaceSlot{tet, f};
          queue.push_back(g->tet);
        } else if (sign[g->tet] != want) {
          result.orientable = false;
          // root -> tet, across (tet, f), then back from g->tet to root.
          auto to_tet = path_to_root(tet);
          std::vector<FaceSlot> cycle(to_tet.rbegin(), to_tet.rend());
          cycle.push_back(FaceSlot{tet, f});
          for (const auto& slot : path_to_root(g->tet)) {
            const auto& back = t.gluing(slot.tet, slot.face);
            cycle.push_back(FaceSlot{back->tet, back->perm[slot.face]});
          }
          result.witness = std::move(cycle);
          result.assignment.sign.clear();
          return result;
        }
      }
    }
  }
  return result;
}

OrientationAssignment check_closed_orientable(const Triangulation& t) {
  auto result = orient(t);
  if (!result.orientable) {
    std::string msg = "incoherent gluing cycle through";
    for (const auto& slot : result.witness)
      msg += " (t" + std::to_string(slot.tet) + ",f" + std::to_string(slot.face) + ")";
    throw NonOrientableError(msg, result.witness);
  }
  if (!t.is_closed())
    throw Error(ErrorKind::NotClosed, std::to_string(t.boundary_face_count()) + " boundary faces");
  return result.assignment;
}

namespace {

struct IsoState {
  std::vector<int> tet_map;
  std::vector<Perm4> vertex_map;
  std::vector<char> used;
};

// Propagates the anchor a_tet -> (b_tet, perm) through the component of a_tet.
// On failure the state may be partially written; the caller restores it.
bool propagate(const Triangulation& a, const Triangulation& b, IsoState& s, int a_tet, int b_tet, Perm4 perm) {
  s.tet_map[a_tet] = b_tet;
  s.vertex_map[a_tet] = perm;
  s.used[b_tet] = 1;
  std::deque<int> queue{a_tet};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    const int y = s.tet_map[x];
    const Perm4 pi = s.vertex_map[x];
    for (int f = 0; f < 4; ++f) {
      const auto& ga = a.gluing(x, f);
      const auto& gb = b.gluing(y, pi[f]);
      if (ga.has_value() != gb.has_value()) return false;
      if (!ga) continue;
      const Perm4 next = gb->perm * pi * ga->perm.inverse();
      const int x2 = ga->tet;
      const int y2 = gb->tet;
      if (s.tet_map[x2] >= 0) {
        if (s.tet_map[x2] != y2 || s.vertex_map[x2] != next) return false;
        continue;
      }
      if (s.used[y2]) return false;
      s.tet_map[x2] = y2;
      s.vertex_map[x2] = next;
      s.used[y2] = 1;
      queue.push_back(x2);
    }
  }
  return true;
}

bool extend(const Triangulation& a, const Triangulation& b, IsoState& s) {
  int anchor = -1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (s.tet_map[i] < 0) {
      anchor = static_cast<int>(i);
      break;
    }
  if (anchor < 0) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (s.used[j]) continue;
    for (const Perm4& p : all_perms()) {
      IsoState saved = s;
      if (propagate(a, b, s, anchor, static_cast<int>(j), p) && extend(a, b, s)) return true;
      s = std::move(saved);
    }
  }
  return false;
}

} // namespace

std::optional<Isomorphism> are_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.size() != b.size() || a.boundary_face_count() != b.boundary_face_count()) return std::nullopt;
  IsoState s{std::vector<int>(a.size(), -1), std::vector<Perm4>(a.size()), std::vector<char>(b.size(), 0)};
  if (!extend(a, b, s)) return std::nullopt;
  return Isomorphism{std::move(s.tet_map), std::move(s.vertex_map)};
}

bool is_isomorphism(const Triangulation& a, const Triangulation& b, const Isomorphism& iso) {
  if (a.size() != b.size() || iso.tet_map.size() != a.size() || iso.vertex_map.size() != a.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (int m : iso.tet_map) {
    if (m < 0 || m >= static_cast<int>(b.size()) || hit[m]) return false;
    hit[m] = 1;
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    const int y = iso.tet_map[x];
    const Perm4 pi = iso.vertex_map[x];
    for (int f = 0; f < 4; ++f) {
      const auto& ga = a.gluing(static_cast<int>(x), f);
      const auto& gb = b.gluing(y, pi[f]);
      if (ga.has_value() != gb.has_value()) return false;
      if (!ga) continue;
      if (gb->tet != iso.tet_map[ga->tet]) return false;
      if (gb->perm * pi != iso.vertex_map[ga->tet] * ga->perm) return false;
    }
  }
  return true;
}

Triangulation restrict_to(const Triangulation& t, const std::vector<int>& tets) {
  std::vector<int> index(t.size(), -1);
  for (std::size_t i = 0; i < tets.size(); ++i) index.at(tets[i]) = static_cast<int>(i);
  Triangulation out(tets.size());
  for (std::size_t i = 0; i < tets.size(); ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(tets[i], f);
      if (!g || index[g->tet] < 0) continue;
      if (out.gluing(static_cast<int>(i), f)) continue;
      out.join(static_cast<int>(i), f, index[g->tet], g->perm);
    }
  }
  return out;
}

} // namespace z2tri
