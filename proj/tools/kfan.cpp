#include <CLI11.hpp>
#include <kfan/kfan.hpp>

#include <filesystem>
#include <iostream>

namespace {

using namespace kfan;

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("malformed index list: \"" + s + "\"");
    }
  }
  if (out.empty()) throw Error("malformed index list: \"" + s + "\"");
  return out;
}

MatZ parse_matrix(const std::string& s) {
  MatZ out;
  std::stringstream rows(s);
  std::string row;
  while (std::getline(rows, row, ';')) {
    VecZ r;
    std::stringstream entries(row);
    std::string entry;
    while (std::getline(entries, entry, ',')) {
      try {
        size_t pos = 0;
        r.push_back(Int(std::stoll(entry, &pos)));
        if (pos != entry.size()) throw std::invalid_argument(entry);
      } catch (const std::exception&) {
        throw Error("malformed matrix: \"" + s + "\"");
      }
    }
    if (r.empty()) throw Error("malformed matrix: \"" + s + "\"");
    out.push_back(std::move(r));
  }
  return out;
}

ResolveStrategy parse_strategy(const std::string& s) {
  if (s == "min-phi") return ResolveStrategy::MinPhi;
  if (s == "max-mult") return ResolveStrategy::MaxMult;
  throw Error("unknown strategy: \"" + s + "\" (expected min-phi or max-mult)");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_check(const std::string& path) {
  ToricPair pair = read_pair_file(path);
  auto violations = validate_pair(pair);
  Json j;
  j["label"] = pair.label;
  j["valid"] = violations.empty();
  j["violations"] = violations;
  if (!violations.empty()) {
    emit(j);
    return 2;
  }
  j["smooth"] = fan_is_smooth(pair.fan);
  j["klt"] = klt_check(pair);
  j["standardCoefficients"] = standard_coefficients_check(pair);
  Json mults = Json::array();
  for (const auto& cone : pair.fan.maxCones)
    mults.push_back(to_ll(cone_multiplicity(cone_ray_vectors(pair.fan, cone))));
  j["multiplicities"] = mults;
  j["terminal"] = terminal_check(pair);
  emit(j);
  return 0;
}

int run_compare(const std::string& pathA, const std::string& pathB) {
  auto k = k_compare(read_pair_file(pathA), read_pair_file(pathB));
  emit(kcomparison_to_json(k));
  switch (k.verdict) {
    case Verdict::EQUIVALENT:
      return 0;
    case Verdict::FIRST_GE:
      return 10;
    case Verdict::FIRST_LE:
      return 11;
    default:
      return 12;
  }
}

void run_stringy(const std::string& path, const std::string& strategy) {
  ToricPair pair = read_pair_file(path);
  GrothClass s = stringy_invariant(pair, parse_strategy(strategy));
  Json j;
  j["label"] = pair.label;
  j["stringy"] = groth_to_string(s);
  j["rootIndex"] = s.rootIndex;
  emit(j);
}

void run_blowup(const std::string& path, const std::string& center, const std::string& at) {
  ToricPair pair = read_pair_file(path);
  if (center.empty() == at.empty())
    throw Error("exactly one of --center and --at is required");
  Subdivision sub = center.empty() ? stellar_subdivision_at(pair, [&] {
    VecZ w;
    for (int x : parse_index_list(at)) w.push_back(Int(x));
    return w;
  }())
                                   : star_subdivision(pair, parse_index_list(center));
  std::cout << pair_to_text(sub.pair);
}

void run_resolve(const std::string& path, const std::string& strategy) {
  Resolution res = resolve(read_pair_file(path), parse_strategy(strategy));
  std::cout << pair_to_text(res.pair);
}

void run_wall(const std::string& path, const std::string& wall) {
  WallReport r = wall_analysis(read_pair_file(path), parse_index_list(wall));
  emit(wall_report_to_json(r));
}

void run_flip(const std::string& path, const std::string& wall) {
  ToricPair flipped = perform_flip(read_pair_file(path), parse_index_list(wall));
  std::cout << pair_to_text(flipped);
}

void run_rank(const std::string& path) {
  ToricPair pair = read_pair_file(path);
  Json j;
  j["label"] = pair.label;
  j["rank"] = to_ll(categorical_rank(pair));
  emit(j);
}

void run_mckay(int dim, long long order, const std::string& weights) {
  AbelianGroupData g;
  g.n = dim;
  VecZ w;
  for (int x : parse_index_list(weights)) w.push_back(Int(x));
  g.generators.push_back({Int(order), std::move(w)});
  normalize_group(g);
  auto elements = group_elements(g);
  Json ages = Json::array();
  for (const auto& e : elements) {
    Json entry;
    Json elem = Json::array();
    for (const auto& x : e) elem.push_back(rat_to_string(x));
    entry["element"] = elem;
    entry["age"] = rat_to_string(element_age(e));
    ages.push_back(entry);
  }
  Json j;
  j["order"] = elements.size();
  j["inSL"] = group_in_sl(g);
  j["juniorCount"] = to_ll(junior_count(g));
  j["ages"] = ages;
  j["pair"] = pair_to_json(quotient_fan(g).pair);
  emit(j);
}

void run_examples(const std::string& name, const std::string& outDir) {
  namespace fs = std::filesystem;
  fs::create_directories(outDir);
  auto writePair = [&](const ToricPair& p, const std::string& stem) {
    std::string path = (fs::path(outDir) / (stem + ".json")).string();
    write_pair_file(path, p);
    return path;
  };
  Json j;
  auto emitXYWall = [&](const ToricPair& x, const ToricPair& y, const std::vector<int>& wall) {
    j["x"] = writePair(x, x.label);
    j["y"] = writePair(y, y.label);
    j["wall"] = wall;
  };
  if (name == "francia") {
    auto f = make_francia();
    emitXYWall(f.x, f.y, f.wall);
  } else if (name == "atiyah") {
    auto a = make_atiyah();
    emitXYWall(a.x, a.y, a.wall);
  } else if (name.rfind("flip-", 0) == 0) {
    std::string tail = name.substr(5);
    for (auto& ch : tail)
      if (ch == '-') ch = ',';
    auto rs = parse_index_list(tail);
    if (rs.size() != 2) throw Error("unknown example: \"" + name + "\"");
    auto f = make_flip(rs[0], rs[1]);
    emitXYWall(f.x, f.y, f.wall);
  } else if (name.rfind("quot-", 0) == 0) {
    std::string tail = name.substr(5);
    for (auto& ch : tail)
      if (ch == '-') ch = ',';
    auto nr = parse_index_list(tail);
    if (nr.size() != 2) throw Error("unknown example: \"" + name + "\"");
    auto q = make_quot(nr[0], nr[1]);
    j["x"] = writePair(q.x, q.x.label);
    j["y"] = writePair(q.y, q.y.label);
    j["exceptionalRay"] = q.exceptionalRay;
  } else {
    throw Error("unknown example: \"" + name + "\"");
  }
  emit(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for toric pairs: discrepancies, flips, stringy classes"};
  app.require_subcommand(1);
  int exitCode = 0;

  std::string path, pathB, wall, center, at, weights, matrix, name;
  std::string strategy = "min-phi";
  std::string outDir = ".";
  int dim = 0;
  long long order = 0;

  auto* check = app.add_subcommand("check", "validate a pair file and report its profile");
  check->add_option("file", path)->required();
  check->callback([&] { exitCode = run_check(path); });

  auto* compare = app.add_subcommand("compare", "compare pulled back canonical classes");
  compare->add_option("first", path)->required();
  compare->add_option("second", pathB)->required();
  compare->callback([&] { exitCode = run_compare(path, pathB); });

  auto* stringy = app.add_subcommand("stringy", "stringy class of a pair");
  stringy->add_option("file", path)->required();
  stringy->add_option("--strategy", strategy, "min-phi or max-mult");
  stringy->callback([&] { run_stringy(path, strategy); });

  auto* blowup = app.add_subcommand("blowup", "star or stellar subdivision");
  blowup->add_option("file", path)->required();
  blowup->add_option("--center", center, "comma separated ray indices");
  blowup->add_option("--at", at, "comma separated lattice point");
  blowup->callback([&] { run_blowup(path, center, at); });

  auto* res = app.add_subcommand("resolve", "resolve to a smooth model");
  res->add_option("file", path)->required();
  res->add_option("--strategy", strategy, "min-phi or max-mult");
  res->callback([&] { run_resolve(path, strategy); });

  auto* wallCmd = app.add_subcommand("wall", "classify an interior wall");
  wallCmd->add_option("file", path)->required();
  wallCmd->add_option("--wall", wall, "comma separated ray indices")->required();
  wallCmd->callback([&] { run_wall(path, wall); });

  auto* flip = app.add_subcommand("flip", "flip a flipping wall");
  flip->add_option("file", path)->required();
  flip->add_option("--wall", wall, "comma separated ray indices")->required();
  flip->callback([&] { run_flip(path, wall); });

  auto* rank = app.add_subcommand("rank", "categorical rank of a pair");
  rank->add_option("file", path)->required();
  rank->callback([&] { run_rank(path); });

  auto* sod = app.add_subcommand("sod", "semiorthogonal decomposition ledgers");
  sod->require_subcommand(1);
  auto* sodDiv = sod->add_subcommand("divisorial", "single ray divisorial contraction");
  sodDiv->add_option("first", path)->required();
  sodDiv->add_option("second", pathB)->required();
  sodDiv->callback([&] { emit(sod_report_to_json(sod_divisorial(read_pair_file(path), read_pair_file(pathB)))); });
  auto* sodFlip = sod->add_subcommand("flip", "wall flip");
  sodFlip->add_option("first", path)->required();
  sodFlip->add_option("second", pathB)->required();
  sodFlip->add_option("--wall", wall)->required();
  sodFlip->callback([&] {
    emit(sod_report_to_json(
        sod_flip(read_pair_file(path), read_pair_file(pathB), parse_index_list(wall))));
  });
  auto* sodCoeff = sod->add_subcommand("coeff", "single coefficient drop");
  sodCoeff->add_option("first", path)->required();
  sodCoeff->add_option("second", pathB)->required();
  sodCoeff->callback([&] {
    emit(sod_report_to_json(sod_coefficient_change(read_pair_file(path), read_pair_file(pathB))));
  });
  auto* sodFiber = sod->add_subcommand("fiber", "fiber type projection");
  sodFiber->add_option("first", path)->required();
  sodFiber->add_option("second", pathB)->required();
  sodFiber->add_option("--matrix", matrix, "projection rows, rows split by ; entries by ,")
      ->required();
  sodFiber->callback([&] {
    emit(sod_report_to_json(
        sod_mori_fiber(read_pair_file(path), parse_matrix(matrix), read_pair_file(pathB))));
  });

  auto* mckay = app.add_subcommand("mckay", "ages and juniors of a cyclic quotient");
  mckay->add_option("--dim", dim)->required();
  mckay->add_option("--order", order)->required();
  mckay->add_option("--weights", weights, "comma separated weights")->required();
  mckay->callback([&] { run_mckay(dim, order, weights); });

  auto* examples = app.add_subcommand("examples", "write a bundled example to disk");
  examples->add_option("name", name, "francia, atiyah, flip-R-S, or quot-N-R")->required();
  examples->add_option("--out-dir", outDir);
  examples->callback([&] { run_examples(name, outDir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << error_text(e.what());
    return 1;
  }
  return exitCode;
}
