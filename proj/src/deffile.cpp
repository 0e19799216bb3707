#include "kappa/deffile.hpp"

#include <fstream>
#include <sstream>

namespace kappa {

// ---------------------------------------------------------------- scalars

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw error(errc::parse, "scalar expression '" + s + "': " + msg);
    }

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return v;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v = v / factor();
            else
                return v;
        }
    }

    Scalar factor() {
        skip_ws();
        bool neg = eat('-');
        Scalar v = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            bool eneg = eat('-');
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            if (start == pos) fail("expected integer exponent");
            int e = std::stoi(s.substr(start, pos - start));
            Scalar base = v;
            v = Scalar(1);
            for (int i = 0; i < e; ++i) v *= base;
            if (eneg) v = Scalar(1) / v;
        }
        return neg ? -v : v;
    }

    Scalar atom() {
        skip_ws();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos < s.size() && isdigit((unsigned char)s[pos])) {
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            return Scalar(BigInt::from_string(s.substr(start, pos - start)).to_ll());
        }
        if (pos < s.size() && (isalpha((unsigned char)s[pos]) || s[pos] == '_')) {
            size_t start = pos;
            while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            if (!Params::known(name)) fail("unknown parameter " + name);
            return Scalar::param(Params::lookup(name));
        }
        fail("expected number, parameter or '('");
    }
};

} // namespace

Scalar parse_scalar_expr(const std::string& text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------- lines

namespace {

struct Line {
    int number;
    std::string text;
};

[[noreturn]] void fail_at(const std::string& origin, int line, const std::string& msg) {
    throw error(errc::parse, origin + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    for (;;) {
        size_t at = s.find(sep, pos);
        if (at == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, at - pos));
        pos = at + sep.size();
    }
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// "coef gen[^exp] gen[^exp] ..." over a generator-name lookup
RawTerm parse_term(const std::string& text, const std::function<GenId(const std::string&)>& gid,
                   const std::string& origin, int line) {
    auto toks = split_ws(text);
    if (toks.empty()) fail_at(origin, line, "empty term");
    RawTerm t;
    t.coeff = parse_scalar_expr(toks[0]);
    for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == "1") continue;
        std::string name = toks[i];
        int e = 1;
        if (auto caret = name.find('^'); caret != std::string::npos) {
            e = std::stoi(name.substr(caret + 1));
            name = name.substr(0, caret);
        }
        t.word.push_back({gid(name), e});
    }
    return t;
}

std::vector<RawTerm> parse_terms(const std::string& rhs,
                                 const std::function<GenId(const std::string&)>& gid,
                                 const std::string& origin, int line) {
    std::vector<RawTerm> out;
    for (auto& part : split_on(rhs, ";")) {
        std::string p = trim(part);
        if (p.empty()) continue;
        out.push_back(parse_term(p, gid, origin, line));
    }
    return out;
}

GenClass parse_class(const std::string& s, const std::string& origin, int line) {
    if (s == "exponential") return GenClass::exponential;
    if (s == "translation") return GenClass::translation;
    if (s == "central") return GenClass::central;
    if (s == "rotation") return GenClass::rotation;
    if (s == "boost") return GenClass::boost;
    fail_at(origin, line, "unknown generator class " + s);
}

struct Sections {
    std::map<std::string, std::vector<Line>> by_name;
    std::string kind;
    std::string name;
};

Sections split_sections(const std::string& text, const std::string& origin) {
    Sections out;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    std::string current;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (auto hash = line.find('#'); hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            current = line.substr(1, line.size() - 2);
            out.by_name[current];
            continue;
        }
        auto toks = split_ws(line);
        if (current.empty()) {
            if (toks.size() == 2 && toks[0] == "kind") {
                out.kind = toks[1];
                continue;
            }
            if (toks.size() == 2 && toks[0] == "name") {
                out.name = toks[1];
                continue;
            }
            fail_at(origin, lineno, "expected 'kind', 'name' or a [section] header");
        }
        out.by_name[current].push_back({lineno, line});
    }
    return out;
}

std::pair<std::string, std::string> split_eq(const Line& l, const std::string& origin) {
    auto at = l.text.find('=');
    if (at == std::string::npos) fail_at(origin, l.number, "expected '='");
    return {trim(l.text.substr(0, at)), trim(l.text.substr(at + 1))};
}

HopfPresentation parse_hopf(const Sections& sec, const std::string& origin) {
    std::vector<Generator> gens;
    std::map<std::string, GenId> ids;
    auto gid = [&](const std::string& n) -> GenId {
        auto it = ids.find(n);
        if (it == ids.end()) throw error(errc::parse, origin + ": unknown generator " + n);
        return it->second;
    };

    if (auto ps = sec.by_name.find("params"); ps != sec.by_name.end())
        for (auto& l : ps->second)
            for (auto& tok : split_ws(l.text)) Params::id(tok);

    auto gsec = sec.by_name.find("generators");
    if (gsec == sec.by_name.end()) throw error(errc::parse, origin + ": missing [generators]");
    for (auto& l : gsec->second) {
        auto toks = split_ws(l.text);
        if (toks.size() < 2) fail_at(origin, l.number, "generator needs a name and a class");
        Generator g;
        g.name = toks[0];
        g.klass = parse_class(toks[1], origin, l.number);
        if (toks.size() > 2) {
            // exp(prim: rate, prim: rate)
            std::string rest;
            for (size_t i = 2; i < toks.size(); ++i) rest += toks[i];
            if (rest.substr(0, 4) != "exp(" || rest.back() != ')')
                fail_at(origin, l.number, "expected exp(prim: rate, ...)");
            g.kind = GenKind::grouplike;
            for (auto& piece : split_on(rest.substr(4, rest.size() - 5), ",")) {
                auto cp = split_on(piece, ":");
                if (cp.size() != 2) fail_at(origin, l.number, "expected prim: rate");
                g.exponent.terms.push_back({trim(cp[0]), parse_scalar_expr(trim(cp[1]))});
            }
        }
        ids[g.name] = (GenId)gens.size();
        gens.push_back(std::move(g));
    }

    std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
    if (auto rs = sec.by_name.find("relations"); rs != sec.by_name.end())
        for (auto& l : rs->second) {
            auto [lhs, rhs] = split_eq(l, origin);
            auto names = split_ws(lhs);
            if (names.size() != 2) fail_at(origin, l.number, "bracket key needs two generators");
            gid(names[0]);
            gid(names[1]);
            brackets[{names[0], names[1]}] = parse_terms(rhs, gid, origin, l.number);
        }

    std::map<std::string, TensorElem> cops;
    if (auto cs = sec.by_name.find("coproduct"); cs != sec.by_name.end())
        for (auto& l : cs->second) {
            auto [lhs, rhs] = split_eq(l, origin);
            gid(lhs);
            TensorElem t(2);
            for (auto& part : split_on(rhs, ";")) {
                std::string p = trim(part);
                if (p.empty()) continue;
                auto sides = split_on(p, "(x)");
                if (sides.size() != 2) fail_at(origin, l.number, "tensor term needs one (x)");
                RawTerm left = parse_term(trim(sides[0]), gid, origin, l.number);
                RawTerm right = parse_term("1 " + trim(sides[1]), gid, origin, l.number);
                Word w0, w1;
                for (auto& f : left.word) w0.push_back(f);
                for (auto& f : right.word) w1.push_back(f);
                t.add({w0, w1}, left.coeff * right.coeff);
            }
            cops[lhs] = std::move(t);
        }

    std::map<std::string, Scalar> eps;
    if (auto es = sec.by_name.find("counit"); es != sec.by_name.end())
        for (auto& l : es->second) {
            auto [lhs, rhs] = split_eq(l, origin);
            gid(lhs);
            eps[lhs] = parse_scalar_expr(rhs);
        }

    std::map<std::string, NcPoly> antis;
    if (auto as = sec.by_name.find("antipode"); as != sec.by_name.end())
        for (auto& l : as->second) {
            auto [lhs, rhs] = split_eq(l, origin);
            gid(lhs);
            NcPoly p;
            for (auto& t : parse_terms(rhs, gid, origin, l.number)) {
                Word w;
                for (auto& f : t.word) w.push_back(f);
                p.add(w, t.coeff);
            }
            antis[lhs] = std::move(p);
        }

    std::string name = sec.name.empty() ? origin : sec.name;
    return build_hopf(name, std::move(gens), std::move(brackets), std::move(cops), std::move(eps),
                      std::move(antis));
}

ContractionMap parse_contraction_section(const std::vector<Line>& lines, const std::string& origin) {
    ContractionMap m;
    for (auto& l : lines) {
        auto toks = split_ws(l.text);
        if (toks.size() >= 2 && toks[0] == "limit") {
            m.limit_param = Params::lookup(toks[1]);
            continue;
        }
        if (toks[0] == "param") {
            auto [lhs, rhs] = split_eq(l, origin);
            auto names = split_ws(lhs);
            m.params[Params::lookup(names[1])] = parse_scalar_expr(rhs);
            continue;
        }
        if (toks[0] == "gen") {
            // gen OLD = [c^K] NEW
            auto [lhs, rhs] = split_eq(l, origin);
            auto lhs_toks = split_ws(lhs);
            auto rhs_toks = split_ws(rhs);
            if (lhs_toks.size() != 2 || rhs_toks.empty() || rhs_toks.size() > 2)
                fail_at(origin, l.number, "expected: gen OLD = [c^K] NEW");
            GenScale gs;
            if (rhs_toks.size() == 2) {
                std::string p = rhs_toks[0];
                if (p == "c")
                    gs.power = 1;
                else if (p.substr(0, 2) == "c^")
                    gs.power = std::stoi(p.substr(2));
                else
                    fail_at(origin, l.number, "scale must be c or c^K");
                gs.new_name = rhs_toks[1];
            } else {
                gs.new_name = rhs_toks[0];
            }
            m.gens[lhs_toks[1]] = gs;
            continue;
        }
        fail_at(origin, l.number, "expected limit/param/gen line");
    }
    return m;
}

} // namespace

ParsedFile parse_definition_text(const std::string& text, const std::string& origin) {
    Sections sec = split_sections(text, origin);
    ParsedFile out;
    if (sec.kind == "hopf" || sec.kind.empty()) {
        out.kind = ParsedFile::Kind::hopf;
        out.hopf = parse_hopf(sec, origin);
        return out;
    }
    if (sec.kind == "calculus") {
        out.kind = ParsedFile::Kind::calculus;
        CalculusProblem prob;
        prob.name = sec.name.empty() ? origin : sec.name;
        auto st = sec.by_name.find("spacetime");
        if (st == sec.by_name.end()) throw error(errc::parse, origin + ": missing [spacetime]");
        std::vector<std::string> coord_names;
        std::string sym_name;
        std::vector<Line> bracket_lines;
        for (auto& l : st->second) {
            auto toks = split_ws(l.text);
            if (toks[0] == "symmetry" && toks.size() == 3 && toks[1] == "=") {
                sym_name = toks[2];
            } else if (toks[0] == "coords") {
                coord_names.assign(toks.begin() + 1, toks.end());
            } else if (toks[0] == "bracket") {
                bracket_lines.push_back(l);
            } else {
                fail_at(origin, l.number, "expected symmetry/coords/bracket line");
            }
        }
        if (sym_name.empty() || coord_names.empty())
            throw error(errc::parse, origin + ": [spacetime] needs symmetry and coords");
        std::vector<Generator> gens;
        std::map<std::string, GenId> cid;
        for (auto& n : coord_names) {
            cid[n] = (GenId)gens.size();
            gens.push_back({n, GenKind::ordinary, GenClass::translation, {}, ""});
        }
        auto cgid = [&](const std::string& n) -> GenId {
            auto it = cid.find(n);
            if (it == cid.end()) throw error(errc::parse, origin + ": unknown coordinate " + n);
            return it->second;
        };
        std::map<std::pair<std::string, std::string>, std::vector<RawTerm>> brackets;
        for (auto& l : bracket_lines) {
            auto [lhs, rhs] = split_eq(l, origin);
            auto names = split_ws(lhs);
            if (names.size() != 3) fail_at(origin, l.number, "bracket key: two coordinates");
            brackets[{names[1], names[2]}] = parse_terms(rhs, cgid, origin, l.number);
        }
        prob.coords = Algebra::build(prob.name + "-coords", gens, brackets);
        for (auto& n : coord_names) {
            prob.forms.differential.push_back((int)prob.forms.names.size());
            prob.forms.names.push_back("d" + n);
        }
        if (auto fs = sec.by_name.find("forms"); fs != sec.by_name.end())
            for (auto& l : fs->second) {
                auto toks = split_ws(l.text);
                if (toks.size() == 2 && toks[0] == "extra") {
                    prob.forms.extras.push_back((int)prob.forms.names.size());
                    prob.forms.names.push_back(toks[1]);
                } else {
                    fail_at(origin, l.number, "expected: extra NAME");
                }
            }
        prob.model.sym = &registry_get(sym_name);
        for (GenId g = 0; g < prob.model.sym->alg.size(); ++g)
            if (prob.model.sym->alg.gen(g).kind == GenKind::ordinary)
                prob.model.acting.push_back(g);
        auto sgid = [&](const std::string& n) { return prob.model.sym->alg.gen_id(n); };
        auto fidx = [&](const std::string& n) { return (uint16_t)prob.forms.index_of(n); };
        auto to_cf = [&](const std::vector<RawTerm>& terms, bool forms) {
            CFExpr e;
            for (auto& t : terms) {
                CFWord w;
                for (auto& f : t.word) {
                    if (f.exp != 1)
                        throw error(errc::parse, origin + ": action entries must have degree <= 1");
                    w.push_back(CFLetter{forms, (uint16_t)f.gen});
                }
                e.add(w, t.coeff);
            }
            return e;
        };
        if (auto as = sec.by_name.find("action"); as != sec.by_name.end())
            for (auto& l : as->second) {
                auto [lhs, rhs] = split_eq(l, origin);
                auto names = split_ws(lhs);
                if (names.size() != 2) fail_at(origin, l.number, "action key: sym-gen coordinate");
                prob.model.on_coord[{sgid(names[0]), cgid(names[1])}] =
                    to_cf(parse_terms(rhs, cgid, origin, l.number), false);
            }
        if (auto as = sec.by_name.find("form-action"); as != sec.by_name.end())
            for (auto& l : as->second) {
                auto [lhs, rhs] = split_eq(l, origin);
                auto names = split_ws(lhs);
                if (names.size() != 2) fail_at(origin, l.number, "form-action key: sym-gen form");
                auto fgid = [&](const std::string& n) { return (GenId)prob.forms.index_of(n); };
                prob.model.on_extra_form[{sgid(names[0]), fidx(names[1])}] =
                    to_cf(parse_terms(rhs, fgid, origin, l.number), true);
            }
        if (auto ts = sec.by_name.find("table"); ts != sec.by_name.end()) {
            out.has_table = true;
            for (auto& l : ts->second) {
                auto [lhs, rhs] = split_eq(l, origin);
                auto names = split_ws(lhs);
                if (names.size() != 2) fail_at(origin, l.number, "table key: coordinate form");
                auto fgid = [&](const std::string& n) { return (GenId)prob.forms.index_of(n); };
                for (auto& t : parse_terms(rhs, fgid, origin, l.number)) {
                    if (t.word.size() != 1 || t.word[0].exp != 1)
                        fail_at(origin, l.number, "table entries are one-form combinations");
                    out.table[{cgid(names[0]), prob.forms.index_of(names[1]),
                               (int)t.word[0].gen}] = t.coeff;
                }
            }
        }
        out.calculus = std::move(prob);
        return out;
    }
    if (sec.kind == "bicross") {
        out.kind = ParsedFile::Kind::bicross;
        BicrossData D;
        auto bs = sec.by_name.find("bicross");
        if (bs == sec.by_name.end()) throw error(errc::parse, origin + ": missing [bicross]");
        std::string hname, aname;
        for (auto& l : bs->second) {
            auto [lhs, rhs] = split_eq(l, origin);
            if (lhs == "H")
                hname = rhs;
            else if (lhs == "A")
                aname = rhs;
            else if (lhs == "alpha")
                D.alpha_trivial = (rhs == "trivial");
            else
                fail_at(origin, l.number, "expected H/A/alpha line");
        }
        if (hname.empty() || aname.empty())
            throw error(errc::parse, origin + ": [bicross] needs H and A");
        D.H = registry_get(hname);
        D.A = registry_get(aname);
        auto agid = [&](const std::string& n) { return D.A.alg.gen_id(n); };
        auto hgid = [&](const std::string& n) { return D.H.alg.gen_id(n); };
        if (auto as = sec.by_name.find("action"); as != sec.by_name.end())
            for (auto& l : as->second) {
                auto [lhs, rhs] = split_eq(l, origin);
                auto names = split_ws(lhs);
                if (names.size() != 2) fail_at(origin, l.number, "action key: A-gen H-gen");
                NcPoly p;
                for (auto& t : parse_terms(rhs, agid, origin, l.number)) {
                    Word w(t.word.begin(), t.word.end());
                    p.add(w, t.coeff);
                }
                D.action[{agid(names[0]), hgid(names[1])}] = std::move(p);
            }
        if (auto cs = sec.by_name.find("coaction"); cs != sec.by_name.end())
            for (auto& l : cs->second) {
                auto [lhs, rhs] = split_eq(l, origin);
                MTensor t({&D.A.alg, &D.H.alg});
                for (auto& part : split_on(rhs, ";")) {
                    std::string p = trim(part);
                    if (p.empty()) continue;
                    auto sides = split_on(p, "(x)");
                    if (sides.size() != 2) fail_at(origin, l.number, "tensor term needs one (x)");
                    RawTerm left = parse_term(trim(sides[0]), agid, origin, l.number);
                    RawTerm right = parse_term("1 " + trim(sides[1]), hgid, origin, l.number);
                    Word w0(left.word.begin(), left.word.end());
                    Word w1(right.word.begin(), right.word.end());
                    t.add({w0, w1}, left.coeff * right.coeff);
                }
                D.coaction[hgid(lhs)] = std::move(t);
            }
        if (auto xs = sec.by_name.find("cocycle"); xs != sec.by_name.end())
            for (auto& l : xs->second) {
                auto [lhs, rhs] = split_eq(l, origin);
                auto names = split_ws(lhs);
                if (names.size() != 2) fail_at(origin, l.number, "cocycle key: H-gen H-gen");
                NcPoly p;
                for (auto& t : parse_terms(rhs, agid, origin, l.number)) {
                    Word w(t.word.begin(), t.word.end());
                    p.add(w, t.coeff);
                }
                D.cocycle[{hgid(names[0]), hgid(names[1])}] = std::move(p);
            }
        out.bicross = std::move(D);
        return out;
    }
    if (sec.kind == "contraction") {
        out.kind = ParsedFile::Kind::contraction;
        auto it = sec.by_name.find("contraction");
        if (it == sec.by_name.end()) throw error(errc::parse, origin + ": missing [contraction]");
        out.contraction = parse_contraction_section(it->second, origin);
        return out;
    }
    if (sec.kind == "diagram") {
        out.kind = ParsedFile::Kind::diagram;
        ParsedFile::Diagram d;
        auto st = sec.by_name.find("start");
        if (st == sec.by_name.end()) throw error(errc::parse, origin + ": missing [start]");
        for (auto& l : st->second) {
            auto toks = split_ws(l.text);
            if (toks[0] == "algebra" && toks.size() == 3 && toks[1] == "=") {
                d.start = toks[2];
            } else if (toks[0] == "param") {
                auto [lhs, rhs] = split_eq(l, origin);
                d.start_subst[Params::lookup(split_ws(lhs)[1])] = parse_scalar_expr(rhs);
            } else {
                fail_at(origin, l.number, "expected algebra/param line");
            }
        }
        auto hz = sec.by_name.find("horizontal");
        if (hz == sec.by_name.end()) throw error(errc::parse, origin + ": missing [horizontal]");
        d.horizontal = parse_contraction_section(hz->second, origin);
        auto vt = sec.by_name.find("vertical");
        if (vt == sec.by_name.end()) throw error(errc::parse, origin + ": missing [vertical]");
        for (auto& l : vt->second) {
            auto toks = split_ws(l.text);
            if (toks[0] == "param" && toks.size() == 2)
                d.vertical_param = Params::lookup(toks[1]);
            else if (toks[0] == "order" && toks.size() == 2)
                d.order = (uint32_t)std::stoul(toks[1]);
            else
                fail_at(origin, l.number, "expected param/order line");
        }
        if (auto ex = sec.by_name.find("expect"); ex != sec.by_name.end())
            for (auto& l : ex->second) {
                auto [lhs, rhs] = split_eq(l, origin);
                if (lhs == "right")
                    d.expect_right = rhs;
                else if (lhs == "bottom")
                    d.expect_bottom = rhs;
                else
                    fail_at(origin, l.number, "expected right/bottom");
            }
        out.diagram = std::move(d);
        return out;
    }
    throw error(errc::parse, origin + ": unknown kind " + sec.kind);
}

ParsedFile parse_definition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_definition_text(ss.str(), path);
}

} // namespace kappa
