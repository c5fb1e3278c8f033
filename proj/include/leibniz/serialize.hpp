#ifndef LEIBNIZ_SERIALIZE_HPP
#define LEIBNIZ_SERIALIZE_HPP

#include <json.hpp>

#include <leibniz/calculus.hpp>
#include <leibniz/dsl/transfer.hpp>
#include <leibniz/lc_number.hpp>
#include <leibniz/report.hpp>

namespace leibniz
{

// {"terms": [{"exp": "p/q", "coef": "p/q"}, ...], "precision": T}, terms in
// ascending exponent order. Truncated values add "order": "p/q", the
// exponent below which the terms are exact.
nlohmann::json to_json(const LcNumber &x);
LcNumber lc_number_from_json(const nlohmann::json &j);

// {"example": id, "parameters": [...], "claims": [{"description", "computed",
// "expected", "pass"}], "pass": bool}
nlohmann::json to_json(const GalleryReport &report);

// {"quotient": series, "shadow": "p/q", "superfluous": series}
nlohmann::json to_json(const calculus::DiffResult &result);

// {"identity": bool, "finite_samples": [...], "infinite_samples": [...],
//  "counterexample": point|null, "seed": u64}
nlohmann::json to_json(const dsl::TransferReport &report);
nlohmann::json to_json(const dsl::TransferSample &sample);

} // namespace leibniz

#endif
