#ifndef LEONARD_SERIALIZE_HPP
#define LEONARD_SERIALIZE_HPP

#include <json.hpp>

#include "leonard/awrel.hpp"
#include "leonard/classify.hpp"
#include "leonard/exactmat.hpp"
#include "leonard/lbtd.hpp"
#include "leonard/params.hpp"
#include "leonard/qfield.hpp"

namespace leonard {

using json = nlohmann::json;

// Field elements travel as {"num": ["p/q", ...], "den": ["p/q", ...]} with
// ascending-power coefficient strings; canonical form makes output
// byte-deterministic.
void to_json(json& j, const RationalFunction& f);
void from_json(const json& j, RationalFunction& f);

void to_json(json& j, const QuadExtElement& e);

void to_json(json& j, const FieldMatrix& m);
void from_json(const json& j, FieldMatrix& m);

void to_json(json& j, const EigenvalueSeq& s);
void from_json(const json& j, EigenvalueSeq& s);

void to_json(json& j, const ParameterArray& p);
void from_json(const json& j, ParameterArray& p);

void to_json(json& j, const ClosedFormParams& cf);
void from_json(const json& j, ClosedFormParams& cf);

void to_json(json& j, const LBTDPair& pair);
void from_json(const json& j, LBTDPair& pair);

void to_json(json& j, const AWScalars& s);
void from_json(const json& j, AWScalars& s);

void to_json(json& j, const RecoveryResult& r);

}  // namespace leonard

#endif
