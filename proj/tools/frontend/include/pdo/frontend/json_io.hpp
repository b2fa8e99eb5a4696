#pragma once

#include <nlohmann/json.hpp>

#include "pdo/diffop.hpp"
#include "pdo/resultant.hpp"

namespace pdo::frontend {

using nlohmann::json;

/// [{"exps": [["x", 1, 2], ...], "coeff": "p/q"}, ...] in descending order.
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

/// {"num": <poly terms>, "den": <poly terms>}
json ratfun_to_json(const RatFun& r);
RatFun ratfun_from_json(const json& j);

/// {"dim": n, "terms": [{"dmono": [e1..en], "coeff": {...}}, ...]}
json op_to_json(const DiffOp& op);
DiffOp op_from_json(const json& j);

/// {"dim": n, "coeff": {...}}, the exponential factor left implicit.
json expfun_to_json(const ExpFunction& f);

json outcome_to_json(const ResultantOutcome& r);

}  // namespace pdo::frontend
