#include "gc/field.hpp"

namespace gc {

FieldSpec FieldSpec::parse(const std::string& text) {
  FieldSpec f;
  if (text == "Q" || text == "q" || text == "rational") return f;
  if (text == "ratfun-c" || text == "ratfun") {
    f.kind = Kind::ratfunc;
    return f;
  }
  const std::string pre = "cyclotomic:";
  if (text.rfind(pre, 0) == 0) {
    f.kind = Kind::cyclotomic;
    try {
      f.order = std::stoi(text.substr(pre.size()));
    } catch (const std::exception&) {
      throw ParseError("malformed field '" + text + "'", pre.size(), "cyclotomic order");
    }
    if (f.order < 1 || f.order > 60) throw ParseError("cyclotomic order out of range", pre.size(), "1..60");
    return f;
  }
  throw ParseError("unknown field '" + text + "'", 0, "Q, cyclotomic:M or ratfun-c");
}

std::string FieldSpec::name() const {
  switch (kind) {
    case Kind::rational: return "Q";
    case Kind::ratfunc: return "ratfun-c";
    case Kind::cyclotomic: return "cyclotomic:" + std::to_string(order);
  }
  return "?";
}

}  // namespace gc
