#include "vsl/text_format.hpp"

#include <fstream>
#include <sstream>

namespace vsl {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string w; in >> w;) {
      line.words.push_back(std::move(w));
    }
    if (!line.words.empty()) {
      out.push_back(std::move(line));
    }
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw VslError(ErrorKind::Parse, "line " + std::to_string(line.number) + ": " + what);
}

IntVec read_vec(const Line& line, std::size_t from, std::size_t dim) {
  if (line.words.size() != from + dim) {
    fail(line, "expected " + std::to_string(dim) + " numbers");
  }
  IntVec v;
  for (std::size_t i = from; i < line.words.size(); ++i) {
    try {
      v.push_back(parse_int(line.words[i]));
    } catch (const VslError& e) {
      fail(line, e.what());
    }
  }
  return v;
}

std::string name_of(const Vass& vass, StateId s) { return vass.state_name(s); }

}  // namespace

Vass parse_vass(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) {
    throw VslError(ErrorKind::Parse, "empty VASS description");
  }
  const Line& head = lines.front();
  if (head.words.size() != 2 || head.words[0] != "dim") {
    fail(head, "first declaration must be 'dim D'");
  }
  const Int d = parse_int(head.words[1]);
  if (d <= 0 || d > 1'000'000) {
    fail(head, "dimension must be positive");
  }
  Vass vass(static_cast<std::size_t>(d));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kw = line.words[0];
    try {
      if (kw == "state") {
        if (line.words.size() != 2) {
          fail(line, "expected 'state NAME'");
        }
        vass.add_state(line.words[1]);
      } else if (kw == "trans") {
        if (line.words.size() < 3) {
          fail(line, "expected 'trans SRC DST d1 ... dD'");
        }
        vass.add_transition(line.words[1], read_vec(line, 3, vass.dim()), line.words[2]);
      } else {
        fail(line, "unknown declaration '" + kw + "'");
      }
    } catch (const VslError& e) {
      if (e.kind() == ErrorKind::Parse) {
        throw;
      }
      throw VslError(e.kind(), "line " + std::to_string(line.number) + ": " + e.what());
    }
  }
  return vass;
}

std::string format_vass(const Vass& vass) {
  std::string out = "dim " + std::to_string(vass.dim()) + "\n";
  for (std::size_t s = 0; s < vass.num_states(); ++s) {
    out += "state " + vass.state_name(static_cast<StateId>(s)) + "\n";
  }
  for (const Transition& t : vass.transitions()) {
    out += "trans " + name_of(vass, t.src) + " " + name_of(vass, t.dst) + " " +
           to_string(t.effect) + "\n";
  }
  return out;
}

Configuration parse_configuration(const Vass& vass, std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) {
    throw VslError(ErrorKind::Parse, "expected a single configuration line");
  }
  const Line& line = lines.front();
  return vass.config(line.words[0], read_vec(line, 1, vass.dim()));
}

std::string format_configuration(const Vass& vass, const Configuration& c) {
  return name_of(vass, c.state) + " " + to_string(c.vec);
}

SemilinearConfigSet parse_semilinear(const Vass& vass, std::string_view text) {
  SemilinearConfigSet out(vass.dim());
  std::optional<StateId> state;
  std::optional<IntVec> base;
  std::vector<IntVec> periods;
  auto flush = [&]() {
    if (state) {
      if (!base) {
        throw VslError(ErrorKind::Parse, "component without base");
      }
      out.add(*state, LinearSet(*base, periods));
    }
    state.reset();
    base.reset();
    periods.clear();
  };
  for (const Line& line : tokenize(text)) {
    const std::string& kw = line.words[0];
    if (kw == "component") {
      if (line.words.size() != 2) {
        fail(line, "expected 'component STATE'");
      }
      flush();
      state = vass.state(line.words[1]);
    } else if (kw == "base") {
      if (!state || base) {
        fail(line, "'base' must follow 'component' exactly once");
      }
      base = read_vec(line, 1, vass.dim());
    } else if (kw == "period") {
      if (!base) {
        fail(line, "'period' before 'base'");
      }
      periods.push_back(read_vec(line, 1, vass.dim()));
    } else {
      fail(line, "unknown declaration '" + kw + "'");
    }
  }
  flush();
  return out;
}

std::string format_semilinear(const Vass& vass, const SemilinearConfigSet& set) {
  std::string out;
  for (const Component& c : set.components()) {
    out += "component " + name_of(vass, c.state) + "\n";
    out += "base " + to_string(c.set.base()) + "\n";
    for (const IntVec& p : c.set.periods()) {
      out += "period " + to_string(p) + "\n";
    }
  }
  return out;
}

Run parse_run(const Vass& vass, std::string_view text) {
  std::optional<Configuration> source;
  std::vector<TransitionId> path;
  for (const Line& line : tokenize(text)) {
    if (line.words[0] == "source") {
      if (line.words.size() < 2) {
        fail(line, "expected 'source NAME v1 ... vD'");
      }
      source = vass.config(line.words[1], read_vec(line, 2, vass.dim()));
    } else if (line.words[0] == "path") {
      for (std::size_t i = 1; i < line.words.size(); ++i) {
        const Int t = parse_int(line.words[i]);
        if (t < 0 || t >= vass.num_transitions()) {
          fail(line, "transition index out of range");
        }
        path.push_back(static_cast<TransitionId>(t));
      }
    } else {
      fail(line, "unknown declaration '" + line.words[0] + "'");
    }
  }
  if (!source) {
    throw VslError(ErrorKind::Parse, "run without source");
  }
  return Run::replay(vass, *source, path);
}

std::string format_run(const Vass& vass, const Run& run) {
  std::string out = "source " + format_configuration(vass, run.source()) + "\npath";
  for (TransitionId t : run.transitions()) {
    out += " " + std::to_string(t);
  }
  return out + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw VslError(ErrorKind::Parse, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw VslError(ErrorKind::Parse, "cannot write '" + path + "'");
  }
  out << content;
}

}  // namespace vsl
