#include "commands.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "divide_forge/census.hpp"
#include "divide_forge/document.hpp"
#include "divide_forge/error.hpp"
#include "divide_forge/fiber.hpp"
#include "divide_forge/openbook.hpp"
#include "divide_forge/render.hpp"
#include "json.hpp"

namespace dforge::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_status(Errc code) {
  switch (code) {
    case Errc::SyntaxError:
    case Errc::SchemaError:
    case Errc::CapExceeded:
    case Errc::InvalidArgument:
    case Errc::DuplicateDart:
    case Errc::DartOutOfRange:
    case Errc::UnpairedDart:
    case Errc::FixedDart:
    case Errc::NotFourValent:
      return kUsageError;
    default:
      return kDomainFailure;
  }
}

template <class Fn>
int guarded(const Context& ctx, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    *ctx.err << "error: " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const UsageError& e) {
    *ctx.err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const Context& ctx, const std::optional<std::string>& path,
                  const std::string& text) {
  if (!path || *path == "-") {
    *ctx.out << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + *path);
  out << text;
}

void print_json(const Context& ctx, const ordered_json& j) { *ctx.out << j.dump(2) << "\n"; }

// Plain fixed-width table.
void print_table(const Context& ctx, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
    }
    *ctx.out << s << "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
}

const char* family_letter(CycleFamily f) {
  switch (f) {
    case CycleFamily::Alpha: return "alpha";
    case CycleFamily::Beta: return "beta";
    case CycleFamily::Gamma: return "gamma";
  }
  return "?";
}

std::string family_name(const std::optional<FamilyKind>& f) {
  return f ? std::string(to_string(*f)) : "-";
}

}  // namespace

int cmd_validate(const Context& ctx, const std::string& file) {
  return guarded(ctx, [&] {
    const Divide d = parse_divide(read_file(file));
    const AdmissibilityReport r = validate_admissible(d);
    if (ctx.format == Format::Json) {
      ordered_json j;
      j["admissible"] = r.admissible();
      j["connected"] = r.connected;
      j["faces_are_disks"] = r.faces_are_disks;
      j["colorable"] = r.colorable;
      j["failures"] = r.failures();
      print_json(ctx, j);
    } else {
      *ctx.out << (r.admissible() ? "admissible" : "not admissible: " + r.failures()) << "\n";
    }
    if (!r.admissible()) {
      *ctx.err << "error: NotAdmissible: " << r.failures() << "\n";
      return kDomainFailure;
    }
    return kOk;
  });
}

int cmd_invariants(const Context& ctx, const std::string& file) {
  return guarded(ctx, [&] {
    const Divide d = parse_divide(read_file(file));
    const PageInvariants p = page_invariants(d);
    const InvariantVector inv = invariant_vector(d);
    const HeegaardData hd = heegaard_check(d);
    if (ctx.format == Format::Json) {
      ordered_json j;
      j["g"] = inv.g;
      j["c"] = inv.c;
      j["v"] = inv.v;
      j["k"] = inv.k;
      j["h"] = inv.h;
      j["chi"] = p.euler_char;
      j["heegaard_genus"] = hd.from_openbook;
      j["heegaard_lower_bound"] = hd.lower_bound;
      j["heegaard_consistent"] = hd.consistent;
      print_json(ctx, j);
    } else {
      print_table(ctx, {"g", "c", "v", "k", "h", "chi", "heegaard", "bound", "consistent"},
                  {{std::to_string(inv.g), std::to_string(inv.c), std::to_string(inv.v),
                    std::to_string(inv.k), std::to_string(inv.h), std::to_string(p.euler_char),
                    std::to_string(hd.from_openbook), std::to_string(hd.lower_bound),
                    hd.consistent ? "yes" : "no"}});
    }
    return hd.consistent ? kOk : kDomainFailure;
  });
}

int cmd_fiber(const Context& ctx, const std::string& file) {
  return guarded(ctx, [&] {
    const Divide d = parse_divide(read_file(file));
    const Coloring col = checkerboard(d);
    const FiberComplex f = build_fiber(d, col);
    const VanishingCycleSet cycles = vanishing_cycles(d, col);
    std::vector<int> lengths;
    for (const auto& b : f.boundary_cycles) lengths.push_back(static_cast<int>(b.size()));
    if (ctx.format == Format::Json) {
      ordered_json j;
      j["nodes"] = f.ribbon.vertex_count();
      j["ribbons"] = f.ribbon.edge_count();
      j["euler_characteristic"] = f.euler_characteristic();
      j["boundary_components"] = f.boundary_count();
      j["boundary_lengths"] = lengths;
      j["genus"] = f.genus();
      j["roundabouts"] = f.roundabouts.size();
      j["bands"] = f.bands.size();
      j["alpha"] = cycles.alphas.size();
      j["beta"] = cycles.betas.size();
      j["gamma"] = cycles.gammas.size();
      print_json(ctx, j);
    } else {
      std::string ls;
      for (int x : lengths) ls += (ls.empty() ? "" : ",") + std::to_string(x);
      print_table(ctx, {"quantity", "value"},
                  {{"nodes", std::to_string(f.ribbon.vertex_count())},
                   {"ribbons", std::to_string(f.ribbon.edge_count())},
                   {"euler_characteristic", std::to_string(f.euler_characteristic())},
                   {"boundary_components", std::to_string(f.boundary_count())},
                   {"boundary_lengths", ls},
                   {"genus", std::to_string(f.genus())},
                   {"roundabouts", std::to_string(f.roundabouts.size())},
                   {"bands", std::to_string(f.bands.size())},
                   {"alpha", std::to_string(cycles.alphas.size())},
                   {"beta", std::to_string(cycles.betas.size())},
                   {"gamma", std::to_string(cycles.gammas.size())}});
    }
    return kOk;
  });
}

int cmd_monodromy(const Context& ctx, const std::string& file, bool homology, bool achiral) {
  return guarded(ctx, [&] {
    const Divide d = parse_divide(read_file(file));
    const Coloring col = checkerboard(d);
    const VanishingCycleSet cycles = vanishing_cycles(d, col);
    const auto ordered = cycles.ordered();
    const MonodromyWord word =
        monodromy_word(d, achiral ? TwistConvention::Negative : TwistConvention::Positive);

    // Per-family 1-based indices, e.g. alpha1 beta2.
    auto label = [&](std::uint32_t i) {
      std::size_t base = 0;
      const auto fam = ordered[i].family;
      if (fam == CycleFamily::Beta) base = cycles.alphas.size();
      if (fam == CycleFamily::Gamma) base = cycles.alphas.size() + cycles.betas.size();
      return std::string(family_letter(fam)) + std::to_string(i - base + 1);
    };

    IntMatrix m;
    HomologyBasis basis;
    bool preserves = false;
    if (homology) {
      const FiberComplex f = build_fiber(d, col);
      basis = homology_basis(f);
      m = homological_monodromy(f, cycles, word);
      preserves = (m.transpose() * basis.form * m - basis.form).isZero();
    }

    if (ctx.format == Format::Json) {
      ordered_json j;
      j["length"] = word.length();
      j["word"] = ordered_json::array();
      for (const auto& t : word.twists) {
        j["word"].push_back({{"cycle", label(t.cycle)}, {"sign", t.sign}});
      }
      if (homology) {
        ordered_json rows = ordered_json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
          ordered_json row = ordered_json::array();
          for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
          rows.push_back(row);
        }
        j["homology"] = {{"rank", basis.rank()}, {"matrix", rows}, {"preserves_form", preserves}};
      }
      print_json(ctx, j);
    } else {
      std::string w;
      for (const auto& t : word.twists) {
        w += (w.empty() ? "" : " ") + label(t.cycle) + (t.sign > 0 ? "+" : "-");
      }
      *ctx.out << "word: " << w << "\nlength: " << word.length() << "\n";
      if (homology) {
        *ctx.out << "rank: " << basis.rank() << "\n";
        std::ostringstream s;
        s << m;
        *ctx.out << s.str() << "\npreserves_form: " << (preserves ? "yes" : "no") << "\n";
      }
    }
    return homology && !preserves ? kDomainFailure : kOk;
  });
}

int cmd_enumerate(const Context& ctx, const EnumerateArgs& args) {
  return guarded(ctx, [&] {
    std::vector<CensusEntry> entries;
    if (args.all) {
      CensusOptions opt;
      if (const char* env = std::getenv("DIVIDE_FORGE_MAX_V")) {
        try {
          opt.cap = std::stoi(env);
        } catch (const std::exception&) {
          throw UsageError("DIVIDE_FORGE_MAX_V must be an integer");
        }
      }
      const int max_v = args.max_v.value_or(opt.cap);
      for (auto& e : enumerate_divides(max_v, opt)) {
        if (!args.genus || e.invariants.g == *args.genus) entries.push_back(std::move(e));
      }
    } else {
      if (!args.genus) throw UsageError("--genus is required unless --all is given");
      if (args.max_v) throw UsageError("--max-v needs --all");
      entries = enumerate_genus_one(*args.genus);
    }

    if (ctx.format == Format::Json) {
      ordered_json rows = ordered_json::array();
      for (const auto& e : entries) {
        const auto& i = e.invariants;
        ordered_json row{{"g", i.g}, {"c", i.c}, {"v", i.v}, {"k", i.k}, {"h", i.h}};
        row["family"] = e.family ? ordered_json(std::string(to_string(*e.family))) : nullptr;
        row["form"] = e.form.hex();
        rows.push_back(row);
      }
      print_json(ctx, rows);
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const auto& e : entries) {
        const auto& i = e.invariants;
        rows.push_back({std::to_string(i.g), std::to_string(i.c), std::to_string(i.v),
                        std::to_string(i.k), std::to_string(i.h), family_name(e.family)});
      }
      print_table(ctx, {"g", "c", "v", "k", "h", "family"}, rows);
    }
    return kOk;
  });
}

int cmd_family(const Context& ctx, const std::string& kind, int genus,
               const std::optional<std::string>& output) {
  return guarded(ctx, [&] {
    const auto parsed = parse_family_kind(kind);
    if (!parsed) throw UsageError("unknown family kind " + kind);
    const Divide d = family(*parsed, genus);
    DocumentMetadata md;
    md.name = kind + "-g" + std::to_string(genus);
    md.expected = traced_invariants(d);
    write_output(ctx, output, emit_divide(d, md));
    return kOk;
  });
}

int cmd_render(const Context& ctx, const std::string& file, bool dot, bool svg,
               const std::optional<std::string>& output) {
  return guarded(ctx, [&] {
    if (dot == svg) throw UsageError("choose exactly one of --dot and --svg");
    const Divide d = parse_divide(read_file(file));
    if (dot) {
      write_output(ctx, output, emit_dot(dual_graph(d)));
    } else {
      write_output(ctx, output, emit_svg(build_fiber(d, checkerboard(d))));
    }
    return kOk;
  });
}

}  // namespace dforge::cli
