#include "afree/algebra_io.hpp"

#include "afree/error.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace afree {

namespace {

std::string format_monomial(const GeneratorSet& gens, const Monomial& m)
{
    std::string out;
    for (const auto& f : m.factors()) {
        if (!out.empty())
            out += '*';
        out += gens[f.id].name;
        if (f.exponent > 1)
            out += '^' + std::to_string(f.exponent);
    }
    return out;
}

class PolyParser {
public:
    PolyParser(const GeneratorSetPtr& gens, std::string_view text) : gens_(gens), text_(text) {}

    Element parse()
    {
        Element result(gens_);
        skip_ws();
        if (at_end())
            fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-')
                    sign = -1;
                ++pos_;
                skip_ws();
            }
            else if (!first) {
                fail("expected '+' or '-'");
            }
            result = result + sign * term();
            first = false;
            skip_ws();
        }
        return result;
    }

private:
    Element term()
    {
        Element value = Element::scalar(gens_, 1);
        value = value * factor();
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++pos_;
            skip_ws();
            value = value * factor();
            skip_ws();
        }
        return value;
    }

    Element factor()
    {
        if (at_end())
            fail("unexpected end of polynomial");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
                ++pos_;
            try {
                return Element::scalar(gens_, parse_rational(text_.substr(start, pos_ - start)));
            }
            catch (const std::invalid_argument& e) {
                fail(std::string("bad coefficient: ") + e.what());
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto id = gens_->find(name);
            if (!id)
                fail("unknown generator '" + name + "'");
            skip_ws();
            unsigned long exponent = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                std::size_t es = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
                if (es == pos_)
                    fail("expected exponent after '^'");
                exponent = std::stoul(std::string(text_.substr(es, pos_ - es)));
            }
            if (exponent == 0)
                return Element::scalar(gens_, 1);
            if ((*gens_)[*id].is_odd() && exponent > 1)
                return Element(gens_);
            return Element::monomial(gens_, Monomial::power(*gens_, *id, static_cast<std::uint32_t>(exponent)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(0, what + " at column " + std::to_string(pos_ + 1));
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    const GeneratorSetPtr& gens_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split_ws(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

}  // namespace

std::string format_element(const Element& e)
{
    if (e.is_zero())
        return "0";
    const GeneratorSet& gens = *e.generators();
    std::string out;
    for (const auto& [m, c] : e.terms()) {
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (m.is_unit()) {
            out += to_string(mag);
        }
        else {
            if (mag != 1)
                out += to_string(mag) + "*";
            out += format_monomial(gens, m);
        }
    }
    return out;
}

Element parse_element(const GeneratorSetPtr& gens, std::string_view text)
{
    return PolyParser(gens, text).parse();
}

std::string write_algebra(const SullivanAlgebra& A)
{
    std::string out = "sullivan v1\n";
    const GeneratorSet& gens = *A.generators();
    for (const auto& g : gens.all())
        out += "gen " + g.name + " " + std::to_string(g.degree) + "\n";
    for (const auto& g : gens.all())
        out += "d " + g.name + " = " + format_element(A.differential(g.id)) + "\n";
    return out;
}

SullivanAlgebra read_algebra(std::string_view text)
{
    std::istringstream in{std::string(text)};
    SullivanAlgebraBuilder builder;
    bool header = false;
    bool in_differentials = false;
    std::vector<bool> assigned;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto words = split_ws(line);
        if (words.empty() || words[0][0] == '#')
            continue;
        if (!header) {
            if (words.size() != 2 || words[0] != "sullivan" || words[1] != "v1")
                throw ParseError(lineno, "expected header 'sullivan v1'");
            header = true;
            continue;
        }
        if (words[0] == "gen") {
            if (in_differentials)
                throw ParseError(lineno, "generator declared after differentials");
            if (words.size() != 3)
                throw ParseError(lineno, "expected 'gen <name> <degree>'");
            int degree = 0;
            try {
                std::size_t used = 0;
                degree = std::stoi(words[2], &used);
                if (used != words[2].size())
                    throw std::invalid_argument("trailing characters");
            }
            catch (const std::exception&) {
                throw ParseError(lineno, "bad degree '" + words[2] + "'");
            }
            try {
                builder.add_generator(words[1], degree);
            }
            catch (const PreconditionError& e) {
                throw ParseError(lineno, e.what());
            }
        }
        else if (words[0] == "d") {
            const auto& gens = builder.generators();
            if (!in_differentials) {
                in_differentials = true;
                assigned.assign(gens->size(), false);
            }
            auto eq = line.find('=');
            if (words.size() < 4 || words[2] != "=" || eq == std::string::npos)
                throw ParseError(lineno, "expected 'd <name> = <polynomial>'");
            auto id = gens->find(words[1]);
            if (!id)
                throw ParseError(lineno, "unknown generator '" + words[1] + "'");
            if (assigned[*id])
                throw ParseError(lineno, "differential of " + words[1] + " assigned twice");
            assigned[*id] = true;
            try {
                builder.set_differential(*id, parse_element(gens, std::string_view(line).substr(eq + 1)));
            }
            catch (const ParseError& e) {
                throw ParseError(lineno, e.what());
            }
        }
        else {
            throw ParseError(lineno, "unknown directive '" + words[0] + "'");
        }
    }
    if (!header)
        throw ParseError(0, "missing header 'sullivan v1'");
    return builder.build();
}

}  // namespace afree
