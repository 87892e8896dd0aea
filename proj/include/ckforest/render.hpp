#pragma once

#include <string>

#include "ckforest/cm_coeffs.hpp"
#include "ckforest/dominant.hpp"
#include "ckforest/lincomb.hpp"
#include "ckforest/multipoly.hpp"

#include <json.hpp>

namespace ckforest {

using Json = nlohmann::ordered_json;

// Text forms. Linear combinations print every coefficient ("-1*[[]] + 1*[] []");
// tensors drop a coefficient of one ("1(x)1" prints as the two unit forests).
std::string to_text(const LinComb& x);
std::string to_text(const Tensor& t);
std::string to_text(const CoeffTable& table);
std::string to_text(const MultiPoly& p);
std::string to_text(const HarmonicForm& form);
std::string to_text(const IndexSeq& idx);

Json to_json(const LinComb& x);
Json to_json(const Tensor& t);
Json to_json(const CoeffTable& table);
Json to_json(const MultiPoly& p);
Json to_json(const HarmonicForm& form);

std::string to_csv(const CoeffTable& table);

}  // namespace ckforest
