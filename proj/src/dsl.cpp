#include "sss/dsl.hpp"

#include <algorithm>
#include <sstream>

namespace sss {

const SetValuedFunctor* SystemDocument::functor(const std::string& name) const {
    for (const auto& f : functors)
        if (f.name == name) return &f;
    return nullptr;
}

const Coalgebra* SystemDocument::coalgebra(const std::string& name) const {
    for (const auto& c : coalgebras)
        if (c.name == name) return &c;
    return nullptr;
}

SelfSimilaritySystem SystemDocument::system() const { return {category, module, {}, {}}; }

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

bool id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
           c == '@' || c == '/';
}

// Splits a line into tokens; `#` starts a comment.
std::vector<Token> tokenize(const std::string& line, std::string* comment) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') {
            if (comment) *comment = line.substr(i + 1);
            break;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({"->", i + 1});
            i += 2;
            continue;
        }
        if (id_char(c)) {
            std::size_t j = i;
            while (j < line.size() && id_char(line[j])) ++j;
            out.push_back({line.substr(i, j - i), i + 1});
            i = j;
            continue;
        }
        out.push_back({std::string(1, c), i + 1});
        ++i;
    }
    return out;
}

struct Parser {
    std::vector<ParseError> errors;
    SystemDocument doc;
    bool have_category = false;
    bool have_module = false;

    void err(std::size_t line, std::size_t col, const std::string& msg) {
        errors.push_back({line, col, msg});
    }
};

bool match_seq(const std::vector<Token>& toks, std::size_t from,
               const std::vector<std::string>& pattern) {
    if (toks.size() < from + pattern.size()) return false;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (!pattern[i].empty() && toks[from + i].text != pattern[i]) return false;
    return true;
}

}  // namespace

ParseResult parse_system(const std::string& text) {
    Parser p;

    enum class Section {
        None,
        CatObjects,
        CatMorphisms,
        CatCompose,
        ModElements,
        ModLeft,
        ModRight,
        Functor,
        Coalgebra,
    };
    Section section = Section::None;
    SetValuedFunctor* cur_functor = nullptr;
    Coalgebra* cur_coalgebra = nullptr;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string comment;
        std::vector<Token> t = tokenize(raw, &comment);
        if (comment.find("reconstructed: true") != std::string::npos)
            p.doc.reconstructed = true;
        if (t.empty()) continue;
        const std::string& head = t[0].text;

        if (head == "category") {
            if (t.size() != 2) {
                p.err(lineno, t[0].column, "expected: category NAME");
                continue;
            }
            if (p.have_category) {
                p.err(lineno, t[0].column, "duplicate category block");
                continue;
            }
            p.have_category = true;
            p.doc.category.name = t[1].text;
            section = Section::None;
            continue;
        }
        if (head == "objects" && match_seq(t, 1, {":"})) {
            for (std::size_t i = 2; i < t.size(); ++i) {
                if (std::find(p.doc.category.objects.begin(), p.doc.category.objects.end(),
                              t[i].text) != p.doc.category.objects.end())
                    p.err(lineno, t[i].column, "duplicate object id: " + t[i].text);
                else
                    p.doc.category.objects.push_back(t[i].text);
            }
            section = Section::CatObjects;
            continue;
        }
        if (head == "morphisms" && match_seq(t, 1, {":"}) && t.size() == 2) {
            section = Section::CatMorphisms;
            continue;
        }
        if (head == "compose" && match_seq(t, 1, {":"}) && t.size() == 2) {
            section = Section::CatCompose;
            continue;
        }
        if (head == "module") {
            if (t.size() != 4 || t[2].text != "over") {
                p.err(lineno, t[0].column, "expected: module NAME over CAT");
                continue;
            }
            if (p.have_module) {
                p.err(lineno, t[0].column, "duplicate module block");
                continue;
            }
            if (!p.have_category || t[3].text != p.doc.category.name) {
                p.err(lineno, t[3].column, "unknown category: " + t[3].text);
                continue;
            }
            p.have_module = true;
            p.doc.module.name = t[1].text;
            section = Section::None;
            continue;
        }
        if (head == "elements" && match_seq(t, 1, {":"}) && t.size() == 2) {
            section = Section::ModElements;
            continue;
        }
        if (head == "left" && match_seq(t, 1, {":"}) && t.size() == 2) {
            section = Section::ModLeft;
            continue;
        }
        if (head == "right" && match_seq(t, 1, {":"}) && t.size() == 2) {
            section = Section::ModRight;
            continue;
        }
        if (head == "functor") {
            if (t.size() != 4 || t[2].text != "on") {
                p.err(lineno, t[0].column, "expected: functor NAME on CAT");
                continue;
            }
            if (!p.have_category || t[3].text != p.doc.category.name) {
                p.err(lineno, t[3].column, "unknown category: " + t[3].text);
                continue;
            }
            p.doc.functors.push_back({});
            cur_functor = &p.doc.functors.back();
            cur_functor->name = t[1].text;
            section = Section::Functor;
            continue;
        }
        if (head == "coalgebra") {
            if (t.size() != 4 || t[2].text != "on") {
                p.err(lineno, t[0].column, "expected: coalgebra NAME on FUNCTOR");
                continue;
            }
            p.doc.coalgebras.push_back({});
            cur_coalgebra = &p.doc.coalgebras.back();
            cur_coalgebra->name = t[1].text;
            // carrier filled in the finalize step (functor may not be bound yet
            // only if declared earlier; forward references are errors)
            bool found = false;
            for (const auto& f : p.doc.functors)
                if (f.name == t[3].text) {
                    cur_coalgebra->carrier = f;
                    found = true;
                }
            if (!found) p.err(lineno, t[3].column, "unknown functor: " + t[3].text);
            section = Section::Coalgebra;
            continue;
        }

        switch (section) {
            case Section::CatMorphisms: {
                if (t.size() != 5 || t[1].text != ":" || t[3].text != "->") {
                    p.err(lineno, t[0].column, "expected: id : obj -> obj");
                    break;
                }
                p.doc.category.morphisms.push_back({t[0].text, t[2].text, t[4].text});
                break;
            }
            case Section::CatCompose: {
                if (t.size() != 5 || t[1].text != "o" || t[3].text != "=") {
                    p.err(lineno, t[0].column, "expected: g o f = h");
                    break;
                }
                // `g o f = h` declares h = g after f, stored as (f, g) -> h
                p.doc.category.composition[{t[2].text, t[0].text}] = t[4].text;
                break;
            }
            case Section::ModElements: {
                if (t.size() < 7 || t[1].text != "(" || t[3].text != "," ||
                    t[5].text != ")" || t[6].text != ":") {
                    p.err(lineno, t[0].column, "expected: M(b,a): id*");
                    break;
                }
                const std::string b = t[2].text, a = t[4].text;
                auto& elems = p.doc.module.elements[{b, a}];
                for (std::size_t i = 7; i < t.size(); ++i) elems.push_back(t[i].text);
                break;
            }
            case Section::ModLeft: {
                if (t.size() != 5 || t[1].text != "." || t[3].text != "=") {
                    p.err(lineno, t[0].column, "expected: f . m = m'");
                    break;
                }
                p.doc.module.left[{t[0].text, t[2].text}] = t[4].text;
                break;
            }
            case Section::ModRight: {
                if (t.size() != 5 || t[1].text != "." || t[3].text != "=") {
                    p.err(lineno, t[0].column, "expected: m . g = m'");
                    break;
                }
                p.doc.module.right[{t[0].text, t[2].text}] = t[4].text;
                break;
            }
            case Section::Functor: {
                if (t[0].text != "map" && match_seq(t, 1, {"(", "", ")", ":"})) {
                    auto& elems = cur_functor->elements[t[2].text];
                    for (std::size_t i = 5; i < t.size(); ++i) elems.push_back(t[i].text);
                } else if (t[0].text == "map" && t.size() == 7 && t[2].text == ":" &&
                           t[5].text == "->") {
                    // wrong arity falls through to the error below
                    cur_functor->action[{t[1].text, t[3].text}] = t[6].text;
                } else if (t[0].text == "map" && t.size() == 6 && t[2].text == ":" &&
                           t[4].text == "->") {
                    cur_functor->action[{t[1].text, t[3].text}] = t[5].text;
                } else {
                    p.err(lineno, t[0].column,
                          "expected: X(obj): id* or map f: x -> y");
                }
                break;
            }
            case Section::Coalgebra: {
                // xi(obj)[x] = m (x) x'
                if (t.size() == 13 && t[0].text == "xi" && t[1].text == "(" &&
                    t[3].text == ")" && t[4].text == "[" && t[6].text == "]" &&
                    t[7].text == "=" && t[9].text == "(" && t[10].text == "x" &&
                    t[11].text == ")") {
                    cur_coalgebra->structure[t[5].text] = {t[8].text, t[12].text};
                } else {
                    p.err(lineno, t[0].column, "expected: xi(obj)[x] = m (x) x'");
                }
                break;
            }
            default:
                p.err(lineno, t[0].column, "unexpected line: " + t[0].text);
        }
    }

    if (!p.have_category) p.err(lineno + 1, 1, "missing category block");
    if (!p.have_module) p.err(lineno + 1, 1, "missing module block");
    if (!p.errors.empty()) return p.errors;

    // synthesize identities
    for (const auto& a : p.doc.category.objects) {
        const std::string id = "id_" + a;
        if (p.doc.category.morphism(id))
            p.err(1, 1, "morphism id " + id + " collides with the synthesized identity");
        p.doc.category.morphisms.push_back({id, a, a});
        p.doc.category.identity[a] = id;
    }
    p.doc.module.dom_cat = p.doc.category;
    p.doc.module.cod_cat = p.doc.category;
    p.doc.module.reindex();
    for (auto& f : p.doc.functors) f.base = p.doc.category;
    for (auto& c : p.doc.coalgebras) c.carrier.base = p.doc.category;
    if (!p.errors.empty()) return p.errors;

    // reference resolution and totality; structural (table) violations are
    // positioned at line 1 of the document
    for (const auto& v : validate_category(p.doc.category)) p.err(1, 1, v);
    if (p.errors.empty())
        for (const auto& v : validate_module(p.doc.module)) p.err(1, 1, v);
    if (p.errors.empty())
        for (const auto& f : p.doc.functors)
            for (const auto& v : validate_functor(f))
                p.err(1, 1, "functor " + f.name + ": " + v);
    if (!p.errors.empty()) return p.errors;
    return p.doc;
}

std::string print_system(const SystemDocument& doc) {
    std::ostringstream out;
    if (doc.reconstructed) out << "# reconstructed: true\n";
    out << "category " << doc.category.name << "\n";
    out << "objects:";
    for (const auto& a : doc.category.objects) out << " " << a;
    out << "\n";
    bool any = false;
    for (const auto& m : doc.category.morphisms)
        if (!doc.category.is_identity(m.id)) any = true;
    if (any) {
        out << "morphisms:\n";
        for (const auto& m : doc.category.morphisms)
            if (!doc.category.is_identity(m.id))
                out << "  " << m.id << " : " << m.dom << " -> " << m.cod << "\n";
    }
    if (!doc.category.composition.empty()) {
        out << "compose:\n";
        for (const auto& [pair, h] : doc.category.composition)
            out << "  " << pair.second << " o " << pair.first << " = " << h << "\n";
    }

    out << "\nmodule " << doc.module.name << " over " << doc.category.name << "\n";
    out << "elements:\n";
    for (const auto& [ba, elems] : doc.module.elements) {
        if (elems.empty()) continue;
        out << "  M(" << ba.first << "," << ba.second << "):";
        for (const auto& e : elems) out << " " << e;
        out << "\n";
    }
    if (!doc.module.left.empty()) {
        out << "left:\n";
        for (const auto& [key, val] : doc.module.left)
            out << "  " << key.first << " . " << key.second << " = " << val << "\n";
    }
    if (!doc.module.right.empty()) {
        out << "right:\n";
        for (const auto& [key, val] : doc.module.right)
            out << "  " << key.first << " . " << key.second << " = " << val << "\n";
    }

    for (const auto& f : doc.functors) {
        out << "\nfunctor " << f.name << " on " << doc.category.name << "\n";
        for (const auto& a : doc.category.objects) {
            auto it = f.elements.find(a);
            if (it == f.elements.end() || it->second.empty()) continue;
            out << "X(" << a << "):";
            for (const auto& e : it->second) out << " " << e;
            out << "\n";
        }
        for (const auto& [key, val] : f.action)
            out << "map " << key.first << ": " << key.second << " -> " << val << "\n";
    }

    for (const auto& c : doc.coalgebras) {
        out << "\ncoalgebra " << c.name << " on " << c.carrier.name << "\n";
        for (const auto& a : doc.category.objects) {
            auto it = c.carrier.elements.find(a);
            if (it == c.carrier.elements.end()) continue;
            for (const auto& x : it->second) {
                const auto& [m, xp] = c.structure.at(x);
                out << "xi(" << a << ")[" << x << "] = " << m << " (x) " << xp << "\n";
            }
        }
    }
    return out.str();
}

PeriodicAddress parse_address(const Module& m, const std::string& literal) {
    std::vector<Token> t = tokenize(literal, nullptr);
    PeriodicAddress addr;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("address literal: " + msg);
    };
    auto parse_list = [&](const std::string& name) {
        std::vector<std::string> items;
        if (i + 2 >= t.size() || t[i].text != name || t[i + 1].text != "=" ||
            t[i + 2].text != "[")
            fail("expected " + name + "=[...]");
        i += 3;
        while (i < t.size() && t[i].text != "]") {
            if (t[i].text == ",") {
                ++i;
                continue;
            }
            items.push_back(t[i].text);
            ++i;
        }
        if (i >= t.size()) fail("unterminated list");
        ++i;  // skip ]
        return items;
    };
    addr.pre = parse_list("pre");
    addr.period = parse_list("period");
    if (i + 1 >= t.size() || t[i].text != "at") fail("expected: at OBJECT");
    addr.anchor = t[i + 1].text;
    if (i + 2 != t.size()) fail("trailing tokens");
    for (const auto& e : addr.pre)
        if (!m.home.count(e)) fail("unknown module element " + e);
    for (const auto& e : addr.period)
        if (!m.home.count(e)) fail("unknown module element " + e);
    auto report = validate_address(m, addr);
    if (!report.empty()) fail(report.front());
    return addr;
}

std::string print_address(const PeriodicAddress& t) {
    std::ostringstream out;
    out << "pre=[";
    for (std::size_t i = 0; i < t.pre.size(); ++i) out << (i ? "," : "") << t.pre[i];
    out << "] period=[";
    for (std::size_t i = 0; i < t.period.size(); ++i)
        out << (i ? "," : "") << t.period[i];
    out << "] at " << t.anchor;
    return out.str();
}

FiniteChain parse_chain(const Module& m, const std::string& literal,
                        const std::string& fallback_anchor) {
    std::vector<Token> toks = tokenize(literal, nullptr);
    FiniteChain c;
    for (const auto& t : toks) {
        if (t.text == ",") continue;
        if (!m.home.count(t.text))
            throw std::invalid_argument("chain literal: unknown module element " + t.text);
        c.elems.push_back(t.text);
    }
    c.anchor = c.elems.empty() ? fallback_anchor : m.target(c.elems.front());
    chain_objects(m, c);
    return c;
}

}  // namespace sss
