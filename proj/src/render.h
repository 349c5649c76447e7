#pragma once

#include <string>
#include <vector>

#include "cores.h"
#include "kschur.h"
#include "symfunc.h"

namespace cf {

// Canonical term order for every rendering: lowest t-degree of the
// coefficient first, ties broken by part lists compared largest first.
// Text terms read `(<poly>)*s[...]`, the poly parens dropped when it is 1;
// JSON renderings carry coefficients as dense arrays from t^0.

std::string render_text(const Ints& partition);
std::string render_text(const SymFunc& f);
std::string render_text(const KExpansion& e);
std::string render_text(const Core& c);
std::string render_text(const StrongMarkedTableau& t);  // filled diagram

std::string render_json(const Ints& partition);
std::string render_json(const SymFunc& f);
std::string render_json(const KExpansion& e);
std::string render_json(const Core& c);
std::string render_json(const StrongMarkedTableau& t);
std::string render_json(const std::vector<StrongMarkedTableau>& ts);

}  // namespace cf
