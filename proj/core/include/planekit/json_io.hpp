#pragma once

#include <string>

#include "planekit/linmap.hpp"
#include "planekit/witness.hpp"

namespace planekit {

// JSON serialization. Each function returns a single JSON value; scalars,
// polynomials, matrices and maps are emitted as strings in the canonical
// text grammar, so every payload re-parses through the same parsers that
// read CLI input. The envelope stamps a schema tag, the verb and the field.

std::string json_of_scalar(const Scalar& s);
std::string json_of_unipoly(const UniPoly& f);
std::string json_of_mat2(const Mat2& m);
std::string json_of_matpoly(const MatPoly2& m);
std::string json_of_aut(const PolyAut& p);
std::string json_of_vdk(const VdkWord& w);
std::string json_of_tau_word(const TauWord& w);
std::string json_of_e_word(const EWord& w);
std::string json_of_classification(const Classification& c);
std::string json_of_degree_report(const DegreeLawReport& r);
std::string json_of_check_report(const CheckReport& r);
std::string json_of_distinctness(const DistinctnessReport& r);
std::string json_of_pingpong(const PingPongReport& r);
std::string json_of_congruence(const CongruenceData& c);
std::string json_of_blockmat(const BlockMat& b);
std::string json_of_verdict(const HypothesisVerdict& v);

std::string json_envelope(const std::string& verb, const FieldSpec& field,
                          const std::string& result_json);

} // namespace planekit
