#include "cbpv/sexpr/sexpr.hpp"

#include <cctype>

namespace cbpv::sexpr {

namespace {

struct Reader {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      } else if (s[pos] == ';') {  // line comment
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  Node read_node() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input");
    if (s[pos] == '(') {
      ++pos;
      Node n;
      for (;;) {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unterminated list");
        if (s[pos] == ')') {
          ++pos;
          return n;
        }
        n.items.push_back(read_node());
      }
    }
    if (s[pos] == ')') throw ParseError("unexpected ')'");
    Node n;
    n.is_atom = true;
    size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')' && s[pos] != ';')
      ++pos;
    n.atom = s.substr(start, pos - start);
    return n;
  }
};

[[noreturn]] void bad(const Node& n, const std::string& what) {
  throw ParseError("expected " + what + ", got: " + write(n));
}

const Node& arg(const Node& n, size_t i, size_t arity, const std::string& head) {
  if (n.items.size() != arity + 1)
    throw ParseError("(" + head + " ...) takes " + std::to_string(arity) +
                     " arguments, got: " + write(n));
  return n.items[i + 1];
}

std::string ident_of(const Node& n) {
  if (!n.is_atom || n.atom.empty()) bad(n, "identifier");
  return n.atom;
}

}  // namespace

Node read(const std::string& text) {
  Reader r{text};
  Node n = r.read_node();
  r.skip_ws();
  if (r.pos != text.size()) throw ParseError("trailing input after expression");
  return n;
}

std::string write(const Node& n) {
  if (n.is_atom) return n.atom;
  std::string out = "(";
  for (size_t i = 0; i < n.items.size(); ++i) {
    if (i) out += ' ';
    out += write(n.items[i]);
  }
  return out + ")";
}

ValueTypePtr value_type_of(const Node& n) {
  if (n.is_atom) {
    if (n.atom == "bool") return vt_bool();
    if (n.atom == "unit") return vt_unit();
    bad(n, "value type");
  }
  if (n.items.empty() || !n.items[0].is_atom) bad(n, "value type");
  const std::string& head = n.items[0].atom;
  if (head == "*")
    return vt_prod(value_type_of(arg(n, 0, 2, head)),
                   value_type_of(arg(n, 1, 2, head)));
  if (head == "U") return vt_thunk(comp_type_of(arg(n, 0, 1, head)));
  bad(n, "value type");
}

CompTypePtr comp_type_of(const Node& n) {
  if (n.is_atom) bad(n, "computation type");
  if (n.items.empty() || !n.items[0].is_atom) bad(n, "computation type");
  const std::string& head = n.items[0].atom;
  if (head == "F") return ct_free(value_type_of(arg(n, 0, 1, head)));
  if (head == "->")
    return ct_arrow(value_type_of(arg(n, 0, 2, head)),
                    comp_type_of(arg(n, 1, 2, head)));
  if (head == "&")
    return ct_cprod(comp_type_of(arg(n, 0, 2, head)),
                    comp_type_of(arg(n, 1, 2, head)));
  bad(n, "computation type");
}

ValuePtr value_of(const Node& n) {
  if (n.is_atom) {
    if (n.atom == "unit") return v_unit();
    if (n.atom == "true") return v_true();
    if (n.atom == "false") return v_false();
    return v_var(ident_of(n));
  }
  if (n.items.empty() || !n.items[0].is_atom) bad(n, "value");
  const std::string& head = n.items[0].atom;
  if (head == "pair")
    return v_pair(value_of(arg(n, 0, 2, head)), value_of(arg(n, 1, 2, head)));
  if (head == "thunk") return v_thunk(comp_of(arg(n, 0, 1, head)));
  bad(n, "value");
}

CompPtr comp_of(const Node& n) {
  if (n.is_atom) bad(n, "computation");
  if (n.items.empty() || !n.items[0].is_atom) bad(n, "computation");
  const std::string& head = n.items[0].atom;
  if (head == "return") return c_return(value_of(arg(n, 0, 1, head)));
  if (head == "to")
    return c_to(comp_of(arg(n, 0, 3, head)), ident_of(arg(n, 1, 3, head)),
                comp_of(arg(n, 2, 3, head)));
  if (head == "lam")
    return c_lam(ident_of(arg(n, 0, 3, head)),
                 value_type_of(arg(n, 1, 3, head)), comp_of(arg(n, 2, 3, head)));
  if (head == "push")
    return c_push(value_of(arg(n, 0, 2, head)), comp_of(arg(n, 1, 2, head)));
  if (head == "force") return c_force(value_of(arg(n, 0, 1, head)));
  if (head == "if")
    return c_if(value_of(arg(n, 0, 3, head)), comp_of(arg(n, 1, 3, head)),
                comp_of(arg(n, 2, 3, head)));
  if (head == "cpair")
    return c_cpair(comp_of(arg(n, 0, 2, head)), comp_of(arg(n, 1, 2, head)));
  if (head == "proj1") return c_proj(1, comp_of(arg(n, 0, 1, head)));
  if (head == "proj2") return c_proj(2, comp_of(arg(n, 0, 1, head)));
  if (head == "match")
    return c_match(value_of(arg(n, 0, 4, head)), ident_of(arg(n, 1, 4, head)),
                   ident_of(arg(n, 2, 4, head)), comp_of(arg(n, 3, 4, head)));
  if (head == "rec")
    return c_rec(ident_of(arg(n, 0, 3, head)), comp_type_of(arg(n, 1, 3, head)),
                 comp_of(arg(n, 2, 3, head)));
  if (head == "fail") return c_fail(comp_type_of(arg(n, 0, 1, head)));
  if (head == "or")
    return c_or(comp_of(arg(n, 0, 2, head)), comp_of(arg(n, 1, 2, head)));
  bad(n, "computation");
}

src::SrcTypePtr src_type_of(const Node& n) {
  if (n.is_atom) {
    if (n.atom == "sbool") return src::st_bool();
    if (n.atom == "sunit") return src::st_unit();
    bad(n, "source type");
  }
  if (n.items.empty() || !n.items[0].is_atom) bad(n, "source type");
  const std::string& head = n.items[0].atom;
  if (head == "sprod")
    return src::st_prod(src_type_of(arg(n, 0, 2, head)),
                        src_type_of(arg(n, 1, 2, head)));
  if (head == "sarrow")
    return src::st_arrow(src_type_of(arg(n, 0, 2, head)),
                         src_type_of(arg(n, 1, 2, head)));
  bad(n, "source type");
}

src::SrcExprPtr src_expr_of(const Node& n) {
  using namespace src;
  if (n.is_atom) {
    if (n.atom == "strue") return s_true();
    if (n.atom == "sfalse") return s_false();
    if (n.atom == "sunit-val") return s_unit();
    return s_var(ident_of(n));
  }
  if (n.items.empty() || !n.items[0].is_atom) bad(n, "source expression");
  const std::string& head = n.items[0].atom;
  if (head == "spair")
    return s_pair(src_expr_of(arg(n, 0, 2, head)),
                  src_expr_of(arg(n, 1, 2, head)));
  if (head == "sfst") return s_fst(src_expr_of(arg(n, 0, 1, head)));
  if (head == "ssnd") return s_snd(src_expr_of(arg(n, 0, 1, head)));
  if (head == "sif")
    return s_if(src_expr_of(arg(n, 0, 3, head)), src_expr_of(arg(n, 1, 3, head)),
                src_expr_of(arg(n, 2, 3, head)));
  if (head == "slam")
    return s_lam(ident_of(arg(n, 0, 3, head)), src_type_of(arg(n, 1, 3, head)),
                 src_expr_of(arg(n, 2, 3, head)));
  if (head == "sapp")
    return s_app(src_expr_of(arg(n, 0, 2, head)),
                 src_expr_of(arg(n, 1, 2, head)));
  if (head == "srecfun")
    return s_recfun(ident_of(arg(n, 0, 5, head)), src_type_of(arg(n, 1, 5, head)),
                    src_type_of(arg(n, 2, 5, head)), ident_of(arg(n, 3, 5, head)),
                    src_expr_of(arg(n, 4, 5, head)));
  if (head == "sfail") return s_fail(src_type_of(arg(n, 0, 1, head)));
  if (head == "sor")
    return s_or(src_expr_of(arg(n, 0, 2, head)),
                src_expr_of(arg(n, 1, 2, head)));
  bad(n, "source expression");
}

ValueTypePtr parse_value_type(const std::string& t) {
  return value_type_of(read(t));
}
CompTypePtr parse_comp_type(const std::string& t) { return comp_type_of(read(t)); }
ValuePtr parse_value(const std::string& t) { return value_of(read(t)); }
CompPtr parse_comp(const std::string& t) { return comp_of(read(t)); }
src::SrcTypePtr parse_src_type(const std::string& t) {
  return src_type_of(read(t));
}
src::SrcExprPtr parse_src_expr(const std::string& t) {
  return src_expr_of(read(t));
}

}  // namespace cbpv::sexpr

// Printers live here so the concrete syntax has a single home.
namespace cbpv {

std::string show(const ValuePtr& v) {
  using VK = ValueTerm::Kind;
  switch (v->kind) {
    case VK::Var:
      return v->var;
    case VK::Unit:
      return "unit";
    case VK::True:
      return "true";
    case VK::False:
      return "false";
    case VK::Pair:
      return "(pair " + show(v->fst) + " " + show(v->snd) + ")";
    case VK::Thunk:
      return "(thunk " + show(v->comp) + ")";
  }
  return "?";
}

std::string show(const CompPtr& m) {
  using CK = CompTerm::Kind;
  switch (m->kind) {
    case CK::CompPair:
      return "(cpair " + show(m->m1) + " " + show(m->m2) + ")";
    case CK::Proj:
      return "(proj" + std::to_string(m->index) + " " + show(m->m1) + ")";
    case CK::Lam:
      return "(lam " + m->var + " " + show(m->vtype) + " " + show(m->m1) + ")";
    case CK::Push:
      return "(push " + show(m->val) + " " + show(m->m1) + ")";
    case CK::Return:
      return "(return " + show(m->val) + ")";
    case CK::To:
      return "(to " + show(m->m1) + " " + m->var + " " + show(m->m2) + ")";
    case CK::MatchPair:
      return "(match " + show(m->val) + " " + m->var + " " + m->var2 + " " +
             show(m->m1) + ")";
    case CK::If:
      return "(if " + show(m->val) + " " + show(m->m1) + " " + show(m->m2) + ")";
    case CK::Force:
      return "(force " + show(m->val) + ")";
    case CK::Rec:
      return "(rec " + m->var + " " + show(m->ctype) + " " + show(m->m1) + ")";
    case CK::Fail:
      return "(fail " + show(m->ctype) + ")";
    case CK::Or:
      return "(or " + show(m->m1) + " " + show(m->m2) + ")";
  }
  return "?";
}

}  // namespace cbpv

namespace cbpv::src {

std::string show(const SrcExprPtr& e) {
  using SK = SrcExpr::Kind;
  switch (e->kind) {
    case SK::Var:
      return e->var;
    case SK::Unit:
      return "sunit-val";
    case SK::True:
      return "strue";
    case SK::False:
      return "sfalse";
    case SK::Pair:
      return "(spair " + show(e->e1) + " " + show(e->e2) + ")";
    case SK::Fst:
      return "(sfst " + show(e->e1) + ")";
    case SK::Snd:
      return "(ssnd " + show(e->e1) + ")";
    case SK::If:
      return "(sif " + show(e->e1) + " " + show(e->e2) + " " + show(e->e3) + ")";
    case SK::Lam:
      return "(slam " + e->var + " " + show(e->type) + " " + show(e->e1) + ")";
    case SK::App:
      return "(sapp " + show(e->e1) + " " + show(e->e2) + ")";
    case SK::RecFun:
      return "(srecfun " + e->var + " " + show(e->type) + " " + show(e->type2) +
             " " + e->var2 + " " + show(e->e1) + ")";
    case SK::Fail:
      return "(sfail " + show(e->type) + ")";
    case SK::Or:
      return "(sor " + show(e->e1) + " " + show(e->e2) + ")";
  }
  return "?";
}

}  // namespace cbpv::src
