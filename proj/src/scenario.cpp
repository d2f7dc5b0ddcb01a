#include "casimir/scenario.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <system_error>

#include "casimir/errors.hpp"
#include "casimir/special.hpp"

namespace casimir {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      message_(message),
      line_(line),
      column_(column) {}

std::vector<double> DistanceGrid::distances() const {
  std::vector<double> out(static_cast<std::size_t>(points));
  if (points == 1) {
    out[0] = d_min;
    return out;
  }
  const double last = static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) {
    const double f = i / last;
    out[i] = scale == GridScale::Log
                 ? std::exp(std::log(d_min) + f * (std::log(d_max) - std::log(d_min)))
                 : d_min + f * (d_max - d_min);
  }
  out.front() = d_min;
  out.back() = d_max;
  return out;
}

namespace {

MirrorStack resolve(const Scenario& s, const MirrorSpec& spec) {
  MirrorStack stack;
  for (const LayerSpec& layer : spec.layers) {
    stack.layers.push_back({s.materials.at(layer.material), layer.thickness});
  }
  stack.substrate = s.materials.at(spec.substrate);
  return stack;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Whitespace-separated tokens of line[begin, end), with their columns.
std::vector<Token> tokenize(std::string_view line, std::size_t begin, std::size_t end) {
  std::vector<Token> out;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && is_space(line[i])) ++i;
    if (i >= end) break;
    const std::size_t start = i;
    while (i < end && !is_space(line[i])) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

enum class Section { None, Material, Mirror1, Mirror2, Gap, Run };

struct Reference {
  std::string id;
  std::size_t line;
  std::size_t column;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scenario run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      if (eol == std::string_view::npos) eol = text_.size();
      ++line_no_;
      handle_line(text_.substr(pos, eol - pos));
      pos = eol + 1;
    }
    finish_section();
    return finalize();
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t column) const {
    throw ParseError(message, line_no_, column);
  }

  void handle_line(std::string_view line) {
    std::size_t end = line.find('#');
    if (end == std::string_view::npos) end = line.size();
    std::size_t begin = 0;
    while (begin < end && is_space(line[begin])) ++begin;
    while (end > begin && is_space(line[end - 1])) --end;
    if (begin == end) return;

    if (line[begin] == '[') {
      if (line[end - 1] != ']') fail("section header must end with ']'", end);
      finish_section();
      open_section(tokenize(line, begin + 1, end - 1), begin + 1);
      return;
    }

    const std::size_t eq = line.find('=', begin);
    if (eq == std::string_view::npos || eq >= end) fail("expected 'key = value'", begin + 1);
    const std::vector<Token> key = tokenize(line, begin, eq);
    if (key.size() != 1) fail("expected a single key before '='", begin + 1);
    if (section_ == Section::None) fail("key outside of a section", begin + 1);
    handle_key(key[0], tokenize(line, eq + 1, end), eq + 2);
  }

  void open_section(const std::vector<Token>& words, std::size_t column) {
    if (words.empty()) fail("empty section name", column);
    const std::string_view name = words[0].text;
    section_line_ = line_no_;
    section_column_ = column;
    if (name == "material") {
      if (words.size() != 2) fail("expected '[material ID]'", words[0].column);
      const Token& id = words[1];
      if (!valid_id(id.text)) fail("invalid material id '" + std::string(id.text) + "'", id.column);
      if (materials_seen_.count(std::string(id.text))) {
        fail("duplicate material id '" + std::string(id.text) + "'", id.column);
      }
      section_ = Section::Material;
      material_id_ = std::string(id.text);
      material_keys_.clear();
      material_ = {};
      ideal_ = std::nullopt;
      return;
    }
    if (name == "mirror") {
      if (words.size() != 2 || (words[1].text != "1" && words[1].text != "2")) {
        fail("expected '[mirror 1]' or '[mirror 2]'", words[0].column);
      }
      const bool first = words[1].text == "1";
      claim_section(first ? seen_mirror1_ : seen_mirror2_, first ? "mirror 1" : "mirror 2",
                    words[0].column);
      section_ = first ? Section::Mirror1 : Section::Mirror2;
      return;
    }
    if (words.size() != 1) fail("unexpected text after section name", words[1].column);
    if (name == "gap") {
      claim_section(seen_gap_, "gap", words[0].column);
      section_ = Section::Gap;
      return;
    }
    if (name == "run") {
      claim_section(seen_run_, "run", words[0].column);
      section_ = Section::Run;
      return;
    }
    fail("unknown section '" + std::string(name) + "'", words[0].column);
  }

  void claim_section(bool& seen, const char* name, std::size_t column) {
    if (seen) fail(std::string("duplicate section [") + name + "]", column);
    seen = true;
  }

  void claim_key(std::set<std::string>& keys, const Token& key) {
    if (!keys.insert(std::string(key.text)).second) {
      fail("duplicate key '" + std::string(key.text) + "'", key.column);
    }
  }

  double number(const Token& t, const char* what) const {
    double value = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      fail(std::string("expected a finite number for ") + what + ", got '" + std::string(t.text) +
               "'",
           t.column);
    }
    return value;
  }

  double non_negative(const Token& t, const char* what) const {
    const double v = number(t, what);
    if (v < 0.0) fail(std::string(what) + " must be >= 0", t.column);
    return v;
  }

  double positive(const Token& t, const char* what) const {
    const double v = number(t, what);
    if (!(v > 0.0)) fail(std::string(what) + " must be > 0", t.column);
    return v;
  }

  const Token& single(const std::vector<Token>& values, std::size_t column) const {
    if (values.size() != 1) fail("expected exactly one value", values.empty() ? column : values[1].column);
    return values[0];
  }

  Reference reference(const Token& t) const {
    if (!valid_id(t.text)) fail("invalid material id '" + std::string(t.text) + "'", t.column);
    return {std::string(t.text), line_no_, t.column};
  }

  void handle_key(const Token& key, const std::vector<Token>& values, std::size_t column) {
    switch (section_) {
      case Section::Material: return material_key(key, values, column);
      case Section::Mirror1: return mirror_key(0, key, values, column);
      case Section::Mirror2: return mirror_key(1, key, values, column);
      case Section::Gap: return gap_key(key, values, column);
      case Section::Run: return run_key(key, values, column);
      case Section::None: break;
    }
    fail("key outside of a section", key.column);
  }

  void material_key(const Token& key, const std::vector<Token>& values, std::size_t column) {
    static constexpr std::array<std::string_view, 4> kFields = {"eps_strength", "eps_resonance",
                                                                "mu_strength", "mu_resonance"};
    if (key.text == "ideal") {
      claim_key(material_keys_, key);
      if (material_keys_.size() > 1) fail("'ideal' conflicts with Lorentz-Drude keys", key.column);
      const Token& v = single(values, column);
      if (v.text == "electric") ideal_ = ResponseModel::perfect_electric();
      else if (v.text == "magnetic") ideal_ = ResponseModel::perfect_magnetic();
      else if (v.text == "vacuum") ideal_ = ResponseModel::vacuum();
      else fail("expected electric, magnetic or vacuum, got '" + std::string(v.text) + "'", v.column);
      return;
    }
    for (std::size_t i = 0; i < kFields.size(); ++i) {
      if (key.text != kFields[i]) continue;
      claim_key(material_keys_, key);
      if (ideal_) fail("Lorentz-Drude key conflicts with 'ideal'", key.column);
      const double v = non_negative(single(values, column), kFields[i].data());
      std::array<double*, 4> slots = {&material_.eps_strength, &material_.eps_resonance,
                                      &material_.mu_strength, &material_.mu_resonance};
      *slots[i] = v;
      return;
    }
    fail("unknown material key '" + std::string(key.text) + "'", key.column);
  }

  void mirror_key(int index, const Token& key, const std::vector<Token>& values,
                  std::size_t column) {
    MirrorSpec& mirror = index == 0 ? scenario_.mirror1 : scenario_.mirror2;
    if (key.text == "layer") {
      if (values.size() != 2) fail("expected 'layer = ID THICKNESS'", values.empty() ? column : values[0].column);
      references_.push_back(reference(values[0]));
      mirror.layers.push_back({std::string(values[0].text), positive(values[1], "thickness")});
      return;
    }
    if (key.text == "substrate") {
      if (!mirror.substrate.empty()) fail("duplicate key 'substrate'", key.column);
      const Token& v = single(values, column);
      references_.push_back(reference(v));
      mirror.substrate = std::string(v.text);
      return;
    }
    fail("unknown mirror key '" + std::string(key.text) + "'", key.column);
  }

  void gap_key(const Token& key, const std::vector<Token>& values, std::size_t column) {
    if (key.text != "medium") fail("unknown gap key '" + std::string(key.text) + "'", key.column);
    if (scenario_.gap) fail("duplicate key 'medium'", key.column);
    const Token& v = single(values, column);
    gap_ref_ = reference(v);
    scenario_.gap = std::string(v.text);
  }

  void run_key(const Token& key, const std::vector<Token>& values, std::size_t column) {
    if (key.text == "T") {
      claim_key(run_keys_, key);
      if (run_keys_.count("temperatures")) fail("'T' conflicts with 'temperatures'", key.column);
      scenario_.temperature = non_negative(single(values, column), "T");
      return;
    }
    if (key.text == "temperatures") {
      claim_key(run_keys_, key);
      if (run_keys_.count("T")) fail("'temperatures' conflicts with 'T'", key.column);
      if (values.empty()) fail("expected at least one temperature", column);
      for (const Token& t : values) scenario_.temperatures.push_back(non_negative(t, "temperature"));
      scenario_.temperature = scenario_.temperatures.front();
      return;
    }
    if (key.text == "d") {
      claim_key(run_keys_, key);
      if (values.size() != 4) {
        fail("expected 'd = MIN MAX POINTS log|lin'", values.empty() ? column : values[0].column);
      }
      DistanceGrid grid;
      grid.d_min = positive(values[0], "d min");
      grid.d_max = positive(values[1], "d max");
      if (grid.d_max < grid.d_min) fail("d max must be >= d min", values[1].column);
      int points = 0;
      const char* first = values[2].text.data();
      const char* last = first + values[2].text.size();
      const auto [ptr, ec] = std::from_chars(first, last, points);
      if (ec != std::errc() || ptr != last || points < 1 || points > 1'000'000) {
        fail("points must be an integer in [1, 1000000]", values[2].column);
      }
      grid.points = points;
      if (values[3].text == "log") grid.scale = GridScale::Log;
      else if (values[3].text == "lin") grid.scale = GridScale::Lin;
      else fail("expected 'log' or 'lin'", values[3].column);
      scenario_.sweep = grid;
      return;
    }
    fail("unknown run key '" + std::string(key.text) + "'", key.column);
  }

  void finish_section() {
    if (section_ == Section::Material) {
      const ResponseModel model =
          ideal_ ? *ideal_
                 : ResponseModel::lorentz_drude(material_.eps_strength, material_.eps_resonance,
                                                material_.mu_strength, material_.mu_resonance);
      scenario_.materials.emplace(material_id_, model);
      materials_seen_.insert(material_id_);
    }
    if (section_ == Section::Mirror1 || section_ == Section::Mirror2) {
      const MirrorSpec& m = section_ == Section::Mirror1 ? scenario_.mirror1 : scenario_.mirror2;
      if (m.substrate.empty()) {
        throw ParseError("mirror section needs 'substrate = ID'", section_line_, section_column_);
      }
    }
    section_ = Section::None;
  }

  Scenario finalize() {
    if (!seen_mirror1_) fail("missing required section [mirror 1]", 1);
    if (!seen_mirror2_) fail("missing required section [mirror 2]", 1);
    for (const Reference& r : references_) {
      if (!scenario_.materials.count(r.id)) {
        throw ParseError("unknown material '" + r.id + "'", r.line, r.column);
      }
    }
    if (gap_ref_) {
      const auto it = scenario_.materials.find(gap_ref_->id);
      if (it == scenario_.materials.end()) {
        throw ParseError("unknown material '" + gap_ref_->id + "'", gap_ref_->line, gap_ref_->column);
      }
      try {
        require_gap_medium(it->second);
      } catch (const UnsupportedConfiguration& e) {
        throw ParseError(e.what(), gap_ref_->line, gap_ref_->column);
      }
    }
    return std::move(scenario_);
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  Section section_ = Section::None;
  std::size_t section_line_ = 0;
  std::size_t section_column_ = 0;

  std::string material_id_;
  std::set<std::string> material_keys_;
  ResponseModel material_;
  std::optional<ResponseModel> ideal_;
  std::set<std::string> materials_seen_;

  bool seen_mirror1_ = false;
  bool seen_mirror2_ = false;
  bool seen_gap_ = false;
  bool seen_run_ = false;
  std::set<std::string> run_keys_;
  std::vector<Reference> references_;
  std::optional<Reference> gap_ref_;
  Scenario scenario_;
};

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void write_mirror(std::string& out, const char* header, const MirrorSpec& mirror) {
  out += header;
  out += '\n';
  for (const LayerSpec& layer : mirror.layers) {
    out += "layer = " + layer.material + " " + format_double(layer.thickness) + "\n";
  }
  out += "substrate = " + mirror.substrate + "\n\n";
}

Scenario make_preset(std::map<std::string, ResponseModel> materials, MirrorSpec m1, MirrorSpec m2) {
  Scenario s;
  s.materials = std::move(materials);
  s.mirror1 = std::move(m1);
  s.mirror2 = std::move(m2);
  s.sweep = DistanceGrid{2.0 * kPi / 500.0, 100.0 * kPi, 64, GridScale::Log};
  return s;
}

// fig1d / fig3 family; strength = sqrt(eps_2(0) - 1) of mirror 2.
Scenario mismatch_preset(double strength) {
  return make_preset({{"dielectric", ResponseModel::lorentz_drude(3.0, 1.0)},
                      {"metamaterial", ResponseModel::lorentz_drude(strength, 1.0, 0.3, 1.0)}},
                     {{}, "dielectric"}, {{}, "metamaterial"});
}

}  // namespace

MirrorStack Scenario::stack1() const { return resolve(*this, mirror1); }
MirrorStack Scenario::stack2() const { return resolve(*this, mirror2); }

ResponseModel Scenario::gap_medium() const {
  return gap ? materials.at(*gap) : ResponseModel::vacuum();
}

std::vector<double> Scenario::temperature_list() const {
  return temperatures.empty() ? std::vector<double>{temperature} : temperatures;
}

Scenario parse_scenario(std::string_view text) { return Parser(text).run(); }

std::string serialize_scenario(const Scenario& s) {
  std::string out;
  for (const auto& [id, m] : s.materials) {
    out += "[material " + id + "]\n";
    switch (m.kind) {
      case ModelKind::PerfectElectric: out += "ideal = electric\n"; break;
      case ModelKind::PerfectMagnetic: out += "ideal = magnetic\n"; break;
      case ModelKind::Vacuum: out += "ideal = vacuum\n"; break;
      case ModelKind::LorentzDrude:
        out += "eps_strength = " + format_double(m.eps_strength) + "\n";
        out += "eps_resonance = " + format_double(m.eps_resonance) + "\n";
        out += "mu_strength = " + format_double(m.mu_strength) + "\n";
        out += "mu_resonance = " + format_double(m.mu_resonance) + "\n";
        break;
    }
    out += '\n';
  }
  write_mirror(out, "[mirror 1]", s.mirror1);
  write_mirror(out, "[mirror 2]", s.mirror2);
  if (s.gap) out += "[gap]\nmedium = " + *s.gap + "\n\n";
  out += "[run]\n";
  if (s.temperatures.empty()) {
    out += "T = " + format_double(s.temperature) + "\n";
  } else {
    out += "temperatures =";
    for (double t : s.temperatures) out += " " + format_double(t);
    out += '\n';
  }
  if (s.sweep) {
    const DistanceGrid& g = *s.sweep;
    out += "d = " + format_double(g.d_min) + " " + format_double(g.d_max) + " " +
           std::to_string(g.points) + (g.scale == GridScale::Log ? " log" : " lin") + "\n";
  }
  return out;
}

std::vector<std::string> validate_passivity(const Scenario&) { return {}; }

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig1a", "fig1b", "fig1c", "fig1d", "fig2",
                                                 "fig3a", "fig3b", "fig3c", "fig3d"};
  return names;
}

Scenario preset_scenario(std::string_view name) {
  if (name == "fig1a") {
    return make_preset({{"drude", ResponseModel::lorentz_drude(1.0, 0.0)}}, {{}, "drude"},
                       {{}, "drude"});
  }
  if (name == "fig1b") {
    return make_preset({{"metamaterial", ResponseModel::lorentz_drude(0.3, 1.0, 0.3, 1.0)}},
                       {{}, "metamaterial"}, {{}, "metamaterial"});
  }
  if (name == "fig1c") {
    return make_preset({{"metal", ResponseModel::lorentz_drude(3.0, 0.0)},
                        {"coating", ResponseModel::lorentz_drude(0.1, 1.0, 0.3, 1.0)}},
                       {{}, "metal"}, {{{"coating", 20.0 * kPi}}, "metal"});
  }
  if (name == "fig1d") return mismatch_preset(0.1);
  if (name == "fig2") {
    Scenario s = mismatch_preset(0.1);
    s.temperatures = {0.3, 0.1, 0.03, 0.0};
    s.temperature = s.temperatures.front();
    return s;
  }
  if (name == "fig3a") return mismatch_preset(0.0);
  if (name == "fig3b") return mismatch_preset(0.1);
  if (name == "fig3c") return mismatch_preset(std::sqrt(0.03));
  if (name == "fig3d") return mismatch_preset(std::sqrt(0.1));
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

}  // namespace casimir
