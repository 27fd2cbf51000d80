#pragma once

#include <string>

#include "artri/algebra.hpp"
#include "artri/homotopy.hpp"
#include "artri/module.hpp"

namespace artri {

/// Parse errors surface as Error(ParseError); name mismatches as AlgebraMismatch.
AlgebraSpec parse_algebra_spec(const std::string& text);
AlgebraPtr load_algebra(const std::string& path);
std::string dump_algebra(const Algebra& alg);

ModuleRep parse_module(const std::string& text, const AlgebraPtr& alg);
ModuleRep load_module(const std::string& path, const AlgebraPtr& alg);
std::string dump_module(const ModuleRep& m);

/// Terms are multiplicity vectors over the simples; summands are expanded in
/// increasing type order, which is also the row/column order of the diffs.
PerfectComplex parse_complex(const std::string& text, const AlgebraPtr& alg);
PerfectComplex load_complex(const std::string& path, const AlgebraPtr& alg);
/// Writes the complex with its summands sorted by type in each degree.
std::string dump_complex(const PerfectComplex& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace artri
