#include "commands.hpp"

#include <ostream>

#include "superlie/catalog.hpp"

namespace superlie::cli {

const char* tool_version() { return SUPERLIE_VERSION; }

namespace {

struct Loaded {
  std::string digest;
  SymplecticRep rep;
};

Loaded load_bytes(const std::string& bytes) {
  Loaded l{io::sha256_hex(bytes), io::problem_from_json(io::parse_json(bytes))};
  io::validate_problem(l.rep);
  return l;
}

// Every command reports failures the same way: the error's own rendering
// on stderr, status 1.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
  }
  return kFailed;
}

}  // namespace

io::json build_report(const std::string& input_bytes) {
  const Loaded in = load_bytes(input_bytes);
  const LiftedRep lifted(in.rep);
  const TestReport r = lifted.decide();
  std::vector<CheckResult> checks = r.diagnostics;
  io::json odd = io::json::array();
  if (r.verdict) {
    const SuperAlgebraData s = lifted.construct_unchecked();
    odd = io::odd_brackets_to_json(s);
    for (auto& c : verify_superalgebra(s)) checks.push_back(std::move(c));
  }
  return {{"tool_version", tool_version()},
          {"input_digest", "sha256:" + in.digest},
          {"verdict", r.verdict},
          {"casimir_scalar", r.casimir_scalar ? io::to_json(*r.casimir_scalar) : io::json(nullptr)},
          {"obstruction", io::to_json(r.obstruction)},
          {"odd_brackets", odd},
          {"checks", io::checks_to_json(checks)}};
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded in = load_bytes(io::read_file(path));
    out << "ok: dim g0 = " << in.rep.algebra.dim() << ", dim v = " << in.rep.space->dim() << "\n";
    return kOk;
  });
}

int cmd_test(const std::string& path, const std::string& report_path, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const io::json report = build_report(io::read_file(path));
    io::write_file_atomic(report_path, io::dump(report));
    out << "verdict " << (report["verdict"].get<bool>() ? "true" : "false") << "\n";
    return kOk;
  });
}

int cmd_construct(const std::string& path, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const std::string bytes = io::read_file(path);
    const Loaded in = load_bytes(bytes);
    const LiftedRep lifted(in.rep);
    SuperAlgebraData s;
    try {
      s = lifted.construct();
    } catch (const NotSuperLieTypeError& e) {
      err << e.what() << "\n"
          << io::json{{"obstruction", io::to_json(e.obstruction())}}.dump() << "\n";
      return kNotSuperLieType;
    }
    const auto checks = verify_superalgebra(s);
    const io::json doc = {{"tool_version", tool_version()},
                          {"input_digest", "sha256:" + in.digest},
                          {"superalgebra", io::superalgebra_to_json(s)},
                          {"checks", io::checks_to_json(checks)}};
    io::write_file_atomic(out_path, io::dump(doc));
    if (!all_pass(checks)) {
      for (const auto& c : checks)
        if (!c.pass) err << "IdentityViolated: " << c.name << " at " << c.witness << "\n";
      return kFailed;
    }
    out << "constructed: dim " << s.even_dim() << "|" << s.odd_dim << "\n";
    return kOk;
  });
}

int cmd_catalog(const std::string& name, const std::vector<std::string>& params,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::string text = name;
    if (!params.empty()) {
      if (name.find('(') != std::string::npos)
        throw Error(ErrorCode::UnknownInstance, "give parameters either inline or as arguments");
      text += "(";
      for (std::size_t i = 0; i < params.size(); ++i) text += (i ? "," : "") + params[i];
      text += ")";
    }
    const InstanceSpec spec = parse_instance(text);
    io::write_file_atomic(out_path, io::dump(io::problem_to_json(build_instance(spec))));
    out << "wrote " << instance_text(spec) << "\n";
    return kOk;
  });
}

}  // namespace superlie::cli
