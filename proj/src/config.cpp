#include "spin3/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace spin3 {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double strict_number(const std::string& s) {
  if (s.empty()) throw DomainError("empty number");
  double value = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin;
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end) throw DomainError("not a number: '" + s + "'");
  return value;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string token;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token += ch;
    }
  }
  if (!token.empty()) out.push_back(token);
  return out;
}

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

// Parsing context: values land in the scenario, the line of each key is kept
// for cross-field diagnostics.
class Parser {
 public:
  Scenario parse(const std::string& text) {
    scenario_.particles = default_particles();
    scenario_.output.closed_form = true;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      const auto hash = raw.find('#');
      const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
      if (content.empty()) continue;
      const auto eq = content.find('=');
      if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
      const std::string key = trim(content.substr(0, eq));
      const std::string value = trim(content.substr(eq + 1));
      if (key.empty()) throw ConfigError(line, "missing key");
      if (value.empty()) throw ConfigError(line, "missing value for '" + key + "'");
      if (lines_.count(key)) {
        throw ConfigError(line, "duplicate key '" + key + "' (first set on line " +
                                    std::to_string(lines_[key]) + ")");
      }
      lines_[key] = line;
      try {
        assign(key, value, line);
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        throw ConfigError(line, e.what());
      }
    }
    finish();
    return scenario_;
  }

 private:
  int line_of(const std::string& key, int fallback = 0) const {
    const auto it = lines_.find(key);
    return it == lines_.end() ? fallback : it->second;
  }
  int line_of_any(std::initializer_list<const char*> keys) const {
    for (const char* k : keys) {
      if (const int l = line_of(k); l != 0) return l;
    }
    return 0;
  }

  static Vec3 parse_direction(const std::string& value) {
    const auto parts = split_list(value);
    if (parts.size() != 3) throw DomainError("a direction needs three components");
    Vec3 v(parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]));
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("direction must be a nonzero vector");
    if (std::abs(n - 1.0) > 1e-12) v /= n;
    return v;
  }

  static Grid parse_grid(const std::string& value, GridKind kind) {
    std::vector<std::string> parts;
    std::string token;
    for (char ch : value) {
      if (ch == ':') {
        parts.push_back(trim(token));
        token.clear();
      } else {
        token += ch;
      }
    }
    parts.push_back(trim(token));
    if (parts.size() != 3) throw DomainError("grid must be 'start:stop:samples'");
    Grid g;
    g.kind = kind;
    g.start = parse_real(parts[0]);
    g.stop = parse_real(parts[1]);
    const double n = strict_number(parts[2]);
    if (!(n >= 1.0) || n != std::floor(n)) throw DomainError("sample count must be a positive integer");
    g.samples = static_cast<std::size_t>(n);
    if (!(g.stop >= g.start)) throw DomainError("grid stop must be >= start");
    return g;
  }

  static WPhase parse_phase(const std::string& value) {
    const double phi = parse_real(value);
    const double third = 2.0 * kPi / 3.0;
    if (std::abs(phi) <= 1e-9) return WPhase::zero;
    if (std::abs(phi - third) <= 1e-9) return WPhase::plus;
    if (std::abs(phi + third) <= 1e-9) return WPhase::minus;
    throw DomainError("phi must be 0, 2pi/3 or -2pi/3");
  }

  static bool parse_switch(const std::string& value) {
    const std::string v = lower(value);
    if (v == "on" || v == "true" || v == "auto" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "no") return false;
    throw DomainError("expected on/off, got '" + value + "'");
  }

  void assign(const std::string& key, const std::string& value, int line) {
    EMField& f = scenario_.field;
    if (key == "field.B") {
      f.b_magnitude = parse_real(value);
      if (!(f.b_magnitude > 0.0)) throw DomainError("B must be positive");
    } else if (key == "field.Bhat") {
      f.b_direction = parse_direction(value);
    } else if (key == "field.E") {
      f.e_magnitude = parse_real(value);
      if (!(f.e_magnitude >= 0.0)) throw DomainError("E must be non-negative");
    } else if (key == "field.Ehat") {
      f.e_direction = parse_direction(value);
    } else if (key.rfind("particle", 0) == 0) {
      assign_particle(key, value, line);
    } else if (key == "state.kind") {
      kind_ = lower(value);
      if (kind_ != "ghz" && kind_ != "w" && kind_ != "wflip" && kind_ != "custom") {
        throw DomainError("state.kind must be ghz, w, wflip or custom");
      }
    } else if (key == "state.epsilon") {
      const double eps = parse_real(value);
      if (eps != 1.0 && eps != -1.0) throw DomainError("state.epsilon must be +1 or -1");
      epsilon_ = static_cast<int>(eps);
    } else if (key == "state.phi") {
      phase_ = parse_phase(value);
    } else if (key == "state.amplitudes") {
      const auto parts = split_list(value);
      if (parts.size() != 16) throw DomainError("state.amplitudes needs 16 reals (re im pairs)");
      for (std::size_t n = 0; n < 8; ++n) {
        amplitudes_[n] = cd(parse_real(parts[2 * n]), parse_real(parts[2 * n + 1]));
      }
    } else if (key == "grid.theta" || key == "grid.t") {
      if (lines_.count("grid.theta") && lines_.count("grid.t")) {
        throw DomainError("give either grid.theta or grid.t, not both");
      }
      scenario_.grid = parse_grid(value, key == "grid.t" ? GridKind::time : GridKind::theta);
    } else if (key == "output.closed_form") {
      scenario_.output.closed_form = parse_switch(value);
    } else if (key == "output.tangles") {
      scenario_.output.tangles = parse_switch(value);
    } else {
      throw DomainError("unknown key '" + key + "'");
    }
  }

  void assign_particle(const std::string& key, const std::string& value, int) {
    const auto dot = key.find('.');
    const std::string head = key.substr(0, dot);
    if (dot == std::string::npos || head.size() != 9 || head[8] < '1' || head[8] > '3') {
      throw DomainError("unknown key '" + key + "'");
    }
    ParticleKinematics& p = scenario_.particles[static_cast<std::size_t>(head[8] - '1')];
    const std::string field = key.substr(dot + 1);
    if (field == "m") {
      p.mass = parse_real(value);
      if (!(p.mass > 0.0)) throw DomainError("mass must be positive");
    } else if (field == "e") {
      p.charge = parse_real(value);
    } else if (field == "alpha") {
      p.anomaly = parse_real(value);
    } else if (field == "v") {
      p.speed = parse_real(value);
      if (!(p.speed >= 0.0 && p.speed < 1.0)) throw DomainError("|v| must lie in [0, 1)");
    } else if (field == "vhat") {
      p.direction = parse_direction(value);
    } else {
      throw DomainError("unknown key '" + key + "'");
    }
  }

  void finish() {
    const EMField& f = scenario_.field;
    if (!(f.e_magnitude < f.b_magnitude)) {
      throw ConfigError(line_of_any({"field.E", "field.B"}), "E must be < B");
    }
    if (f.e_magnitude > 0.0 && std::abs(f.e_direction.dot(f.b_direction)) > 1e-12) {
      throw ConfigError(line_of_any({"field.Ehat", "field.Bhat", "field.E"}),
                        "E must be orthogonal to B");
    }

    const int kind_line = line_of("state.kind");
    auto forbid = [&](const char* key, const char* why) {
      if (const int l = line_of(key); l != 0) throw ConfigError(l, std::string(key) + " " + why);
    };
    if (kind_ == "ghz") {
      forbid("state.phi", "applies to w/wflip states only");
      forbid("state.amplitudes", "applies to custom states only");
      scenario_.state = GhzSpec{epsilon_};
    } else if (kind_ == "w" || kind_ == "wflip") {
      forbid("state.epsilon", "applies to ghz states only");
      forbid("state.amplitudes", "applies to custom states only");
      if (kind_ == "w") {
        scenario_.state = WSpec{phase_};
      } else {
        scenario_.state = WFlipSpec{phase_};
      }
    } else {
      forbid("state.epsilon", "applies to ghz states only");
      forbid("state.phi", "applies to w/wflip states only");
      if (!line_of("state.amplitudes")) throw ConfigError(kind_line, "custom state needs state.amplitudes");
      try {
        (void)ThreeQubitState::normalized(amplitudes_);
      } catch (const std::exception& e) {
        throw ConfigError(line_of("state.amplitudes"), e.what());
      }
      scenario_.state = CustomSpec{amplitudes_};
    }

    if (scenario_.grid.kind == GridKind::theta && !is_special_configuration(scenario_)) {
      throw ConfigError(line_of_any({"grid.theta"}),
                        "a theta grid needs the special configuration (E = 0, B along x, "
                        "velocities orthogonal to B, identical particles); use grid.t");
    }
    try {
      scenario_.validate();
    } catch (const std::exception& e) {
      throw ConfigError(0, e.what());
    }
  }

  Scenario scenario_;
  std::map<std::string, int> lines_;
  std::string kind_ = "ghz";
  int epsilon_ = 1;
  WPhase phase_ = WPhase::zero;
  Amplitudes amplitudes_{};
};

std::string vec_text(const Vec3& v) {
  return format_real(v.x()) + " " + format_real(v.y()) + " " + format_real(v.z());
}

}  // namespace

ConfigError::ConfigError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

double parse_real(const std::string& token) {
  std::string s = lower(trim(token));
  if (s.empty()) throw DomainError("empty number");
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return strict_number(s);

  std::string coefficient = s.substr(0, pi_pos);
  std::string rest = s.substr(pi_pos + 2);
  if (!coefficient.empty() && coefficient.back() == '*') coefficient.pop_back();
  double c = 1.0;
  if (coefficient == "-") {
    c = -1.0;
  } else if (!coefficient.empty() && coefficient != "+") {
    c = strict_number(coefficient);
  }
  double denominator = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw DomainError("not a number: '" + token + "'");
    denominator = strict_number(rest.substr(1));
    if (denominator == 0.0) throw DomainError("division by zero in '" + token + "'");
  }
  return c * kPi / denominator;
}

Scenario parse_scenario(const std::string& text) { return Parser().parse(text); }

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize(const Scenario& s) {
  std::ostringstream os;
  os << "field.B = " << format_real(s.field.b_magnitude) << "\n";
  os << "field.Bhat = " << vec_text(s.field.b_direction) << "\n";
  os << "field.E = " << format_real(s.field.e_magnitude) << "\n";
  os << "field.Ehat = " << vec_text(s.field.e_direction) << "\n";
  for (std::size_t p = 0; p < 3; ++p) {
    const auto& k = s.particles[p];
    const std::string prefix = "particle" + std::to_string(p + 1) + ".";
    os << prefix << "m = " << format_real(k.mass) << "\n";
    os << prefix << "e = " << format_real(k.charge) << "\n";
    os << prefix << "alpha = " << format_real(k.anomaly) << "\n";
    os << prefix << "v = " << format_real(k.speed) << "\n";
    os << prefix << "vhat = " << vec_text(k.direction) << "\n";
  }
  auto phase_text = [](WPhase ph) {
    return ph == WPhase::zero ? "0" : ph == WPhase::plus ? "2pi/3" : "-2pi/3";
  };
  if (const auto* g = std::get_if<GhzSpec>(&s.state)) {
    os << "state.kind = ghz\nstate.epsilon = " << (g->epsilon > 0 ? "+1" : "-1") << "\n";
  } else if (const auto* w = std::get_if<WSpec>(&s.state)) {
    os << "state.kind = w\nstate.phi = " << phase_text(w->phase) << "\n";
  } else if (const auto* wf = std::get_if<WFlipSpec>(&s.state)) {
    os << "state.kind = wflip\nstate.phi = " << phase_text(wf->phase) << "\n";
  } else {
    const auto& c = std::get<CustomSpec>(s.state);
    os << "state.kind = custom\nstate.amplitudes =";
    for (const cd& z : c.amplitudes) os << " " << format_real(z.real()) << " " << format_real(z.imag());
    os << "\n";
  }
  os << (s.grid.kind == GridKind::theta ? "grid.theta = " : "grid.t = ") << format_real(s.grid.start)
     << ":" << format_real(s.grid.stop) << ":" << s.grid.samples << "\n";
  os << "output.closed_form = " << (s.output.closed_form ? "auto" : "off") << "\n";
  os << "output.tangles = " << (s.output.tangles ? "on" : "off") << "\n";
  return os.str();
}

}  // namespace spin3
