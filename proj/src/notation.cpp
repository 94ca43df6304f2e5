#include "dtroots/notation.hpp"

#include <cctype>
#include <charconv>

namespace dtroots {

std::string to_text(const RawTuple& t) {
    std::string out = "(" + std::to_string(t.n) + ", " + std::to_string(t.gt) + ", " +
                      std::to_string(t.a) + ";";
    for (std::size_t i = 0; i < t.cones.size(); ++i) {
        out += i == 0 ? " " : ", ";
        out += "(" + std::to_string(t.cones[i].c) + ", " + std::to_string(t.cones[i].x) + ")";
    }
    out += ")";
    return out;
}

std::string to_text(const DataSet& d) { return to_text(d.raw()); }

nlohmann::ordered_json to_json(const DataSet& d) {
    auto cones = nlohmann::ordered_json::array();
    for (const auto& cone : d.cones()) cones.push_back({cone.c, cone.x});
    return {{"n", d.degree()}, {"gt", d.orbit_genus()}, {"a", d.a()}, {"cones", cones}};
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    std::int64_t integer() {
        skip_ws();
        const char* first = s_.data() + pos_;
        const char* last = s_.data() + s_.size();
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{}) fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    void finish() {
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("data set literal, column " + std::to_string(pos_ + 1) + ": " + what);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::int64_t reduce_if_negative(std::int64_t value, std::int64_t modulus, bool zero_to_modulus) {
    if (value >= 0 || modulus <= 0) return value;
    std::int64_t r = value % modulus;
    if (r < 0) r += modulus;
    if (r == 0 && zero_to_modulus) r = modulus;
    return r;
}

}  // namespace

RawTuple parse_text(std::string_view text) {
    Scanner sc(text);
    RawTuple t;
    sc.expect('(');
    t.n = sc.integer();
    sc.expect(',');
    t.gt = sc.integer();
    sc.expect(',');
    t.a = sc.integer();
    sc.expect(';');
    if (!sc.peek(')')) {
        do {
            sc.expect('(');
            ConeDatum cone;
            cone.c = sc.integer();
            sc.expect(',');
            cone.x = sc.integer();
            sc.expect(')');
            t.cones.push_back(cone);
        } while (sc.accept(','));
    }
    sc.expect(')');
    sc.finish();

    t.a = reduce_if_negative(t.a, t.n, true);
    for (auto& cone : t.cones) cone.c = reduce_if_negative(cone.c, cone.x, false);
    return t;
}

RawTuple parse_json(const nlohmann::json& j) {
    try {
        RawTuple t;
        t.n = j.at("n").get<std::int64_t>();
        t.gt = j.at("gt").get<std::int64_t>();
        t.a = j.at("a").get<std::int64_t>();
        for (const auto& pair : j.at("cones")) {
            if (!pair.is_array() || pair.size() != 2) throw ParseError("cone must be [c, x]");
            t.cones.push_back({pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>()});
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("data set JSON: ") + e.what());
    }
}

RawTuple parse_literal(std::string_view literal) {
    const auto first = literal.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && literal[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(literal);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("data set JSON: ") + e.what());
        }
        return parse_json(j);
    }
    return parse_text(literal);
}

}  // namespace dtroots
