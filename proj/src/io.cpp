#include "artri/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace artri {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

void check_name(const json& j, const Algebra& alg) {
  std::string name = j.at("algebra").get<std::string>();
  if (name != alg.name()) throw Error(ErrorCode::AlgebraMismatch, "file refers to '" + name + "', loaded '" + alg.name() + "'");
}

Elem to_elem(const json& j, const Algebra& alg) {
  auto v = j.get<std::vector<std::int64_t>>();
  if (v.size() != alg.dim()) throw Error(ErrorCode::ParseError, "coefficient vector of length " + std::to_string(v.size()));
  Elem e(alg.dim());
  for (std::size_t i = 0; i < v.size(); ++i) e[i] = alg.field().reduce(v[i]);
  return e;
}

json from_elem(const Elem& e, const Fp& f) {
  json a = json::array();
  for (auto x : e) a.push_back(f.lift(x));
  return a;
}

// Permutation sorting the summands by type (stable).
std::vector<std::size_t> sort_order(const Types& t) {
  std::vector<std::size_t> idx(t.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });
  return idx;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

AlgebraSpec parse_algebra_spec(const std::string& text) {
  json j = parse_json(text);
  return guarded([&] {
    AlgebraSpec s;
    s.name = j.at("name").get<std::string>();
    std::int64_t p = j.at("p").get<std::int64_t>();
    if (p < 2 || p > 2147483647 || !is_prime(static_cast<std::uint64_t>(p)))
      throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime in range");
    s.p = static_cast<std::uint32_t>(p);
    s.dim = j.at("dim").get<std::size_t>();
    s.basis = j.at("basis").get<std::vector<std::string>>();
    s.idempotents = j.at("idempotents").get<std::vector<std::size_t>>();
    s.radical = j.at("radical").get<std::vector<std::size_t>>();
    s.mult = j.at("mult").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
    return s;
  });
}

AlgebraPtr load_algebra(const std::string& path) { return Algebra::validate(parse_algebra_spec(read_file(path))); }

std::string dump_algebra(const Algebra& alg) {
  const AlgebraSpec& s = alg.spec();
  json j = {{"name", s.name}, {"p", s.p}, {"dim", s.dim}, {"basis", s.basis},
            {"idempotents", s.idempotents}, {"radical", s.radical}, {"mult", s.mult}};
  return j.dump(1) + "\n";
}

ModuleRep parse_module(const std::string& text, const AlgebraPtr& alg) {
  json j = parse_json(text);
  return guarded([&] {
    check_name(j, *alg);
    std::size_t d = j.at("dim").get<std::size_t>();
    std::vector<Mat> act;
    for (const auto& m : j.at("action")) {
      auto rows = m.get<std::vector<std::vector<std::int64_t>>>();
      if (rows.size() != d) throw Error(ErrorCode::InvalidModule, "action matrix with wrong row count");
      Mat a(d, d, alg->field());
      for (std::size_t r = 0; r < d; ++r) {
        if (rows[r].size() != d) throw Error(ErrorCode::InvalidModule, "action matrix with wrong column count");
        for (std::size_t c = 0; c < d; ++c) a(r, c) = alg->field().reduce(rows[r][c]);
      }
      act.push_back(a);
    }
    ModuleRep mod(alg, d, std::move(act));
    mod.validate();
    return mod;
  });
}

ModuleRep load_module(const std::string& path, const AlgebraPtr& alg) { return parse_module(read_file(path), alg); }

std::string dump_module(const ModuleRep& m) {
  const Fp& f = m.field();
  json act = json::array();
  for (const auto& a : m.actions()) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(f.lift(a(r, c)));
      rows.push_back(row);
    }
    act.push_back(rows);
  }
  json j = {{"algebra", m.alg()->name()}, {"dim", m.dim()}, {"action", act}};
  return j.dump(1) + "\n";
}

PerfectComplex parse_complex(const std::string& text, const AlgebraPtr& alg) {
  json j = parse_json(text);
  return guarded([&] {
    check_name(j, *alg);
    std::map<int, Types> terms;
    for (const auto& [k, v] : j.at("terms").items()) {
      auto mult = v.get<std::vector<std::size_t>>();
      if (mult.size() != alg->rank()) throw Error(ErrorCode::InvalidComplex, "multiplicity vector of wrong length");
      Types t;
      for (std::size_t i = 0; i < mult.size(); ++i)
        for (std::size_t c = 0; c < mult[i]; ++c) t.push_back(i);
      terms[std::stoi(k)] = t;
    }
    std::map<int, ProjMat> diffs;
    if (j.contains("diffs"))
      for (const auto& [k, v] : j.at("diffs").items()) {
        int n = std::stoi(k);
        ProjMat d = ProjMat::zero(*alg, terms[n], terms[n - 1]);
        if (v.size() != d.src.size()) throw Error(ErrorCode::InvalidComplex, "d_" + k + " has the wrong row count");
        for (std::size_t a = 0; a < d.src.size(); ++a) {
          if (v[a].size() != d.dst.size()) throw Error(ErrorCode::InvalidComplex, "d_" + k + " has the wrong column count");
          for (std::size_t b = 0; b < d.dst.size(); ++b) d.at(a, b) = to_elem(v[a][b], *alg);
        }
        diffs[n] = d;
      }
    PerfectComplex c(alg, terms, diffs);
    c.validate();
    return c;
  });
}

PerfectComplex load_complex(const std::string& path, const AlgebraPtr& alg) { return parse_complex(read_file(path), alg); }

std::string dump_complex(const PerfectComplex& c) {
  json terms = json::object(), diffs = json::object();
  if (!c.is_zero()) {
    const Algebra& A = c.algebra();
    for (const auto& [n, t] : c.terms()) {
      std::vector<std::size_t> mult(A.rank(), 0);
      for (auto i : t) mult[i] += 1;
      terms[std::to_string(n)] = mult;
    }
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
      ProjMat d = c.diff(n);
      auto rs = sort_order(d.src), cs = sort_order(d.dst);
      json rows = json::array();
      for (auto a : rs) {
        json row = json::array();
        for (auto b : cs) row.push_back(from_elem(d.at(a, b), A.field()));
        rows.push_back(row);
      }
      diffs[std::to_string(n)] = rows;
    }
  }
  json j = {{"algebra", c.is_zero() ? std::string() : c.algebra().name()}, {"terms", terms}, {"diffs", diffs}};
  return j.dump(1) + "\n";
}

}  // namespace artri
