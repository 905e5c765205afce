#include <cxxabi.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <random>
#include <typeinfo>

#include <CLI11.hpp>

#include "hopfact/json_io.hpp"

using namespace hopfact;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kMalformed = 2;

struct Outcome {
    int code = kOk;
    Json doc;
};

// a path, "-" for stdin, or the document itself
Json load(const std::string& input) {
    std::string text;
    const auto first = input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) {
        text = input;
    } else if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(input);
        if (!f) throw SchemaError("cannot read input file " + input);
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("/: invalid JSON: ") + e.what());
    }
}

// accepts a bare action or a catalog entry wrapping one
InnerActionMap action_of(const Json& j, const std::string& where) {
    if (j.is_object() && j.contains("action")) return action_from_json(j["action"], where + "/action");
    return action_from_json(j, where);
}

ExactMatrix random_invertible(size_t m, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-3, 3);
    for (;;) {
        ExactMatrix c(m, m);
        for (auto& z : c.data()) z = CycNum(dist(rng));
        if (!det(c).is_zero()) return c;
    }
}

InnerActionMap conjugated(const InnerActionMap& a, std::mt19937_64& rng) {
    const ExactMatrix c = random_invertible(a.m, rng);
    const ExactMatrix ci = inverse(c);
    auto conj = [&](const ExactMatrix& x) { return mul(mul(c, x), ci); };
    std::vector<ExactMatrix> ug, ux;
    for (const auto& g : a.ug) ug.push_back(conj(g));
    for (const auto& x : a.ux) ux.push_back(conj(x));
    return make_action(a.pres, std::move(ug), std::move(ux));
}

Outcome run_verify(const Json& in) {
    const Certificate c = certify_action(action_of(in, ""));
    return {c.pass ? kOk : kFailed, to_json(c)};
}

Outcome run_act(const Json& in) {
    if (!in.is_object() || !in.contains("word")) throw SchemaError("/word: missing field");
    if (!in.contains("matrix")) throw SchemaError("/matrix: missing field");
    if (!in.contains("action")) throw SchemaError("/action: missing field");
    const InnerActionMap a = action_of(in["action"], "/action");
    if (!in["word"].is_string()) throw SchemaError("/word: expected a string");
    const std::string word = in["word"].get<std::string>();
    const ExactMatrix m = matrix_from_json(in["matrix"], "/matrix");
    if (m.rows() != a.m || m.cols() != a.m) throw SchemaError("/matrix: expected an m x m matrix");
    Word w;
    try {
        w = parse_word(a.pres, word);
    } catch (const Error& e) {
        throw SchemaError(std::string("/word: ") + e.what());
    }
    return {kOk, Json{{"word", word_text(a.pres, w)}, {"result", to_json(act(a, w, m))}}};
}

Outcome run_grading(const Json& in) {
    const InnerActionMap a = action_of(in, "");
    const Grading g = grading_from_action(a.pres.datum.group, a.ug);
    return {kOk, Json{{"grading", to_json(g)}, {"classification", to_json(classify_kind(g))}}};
}

Outcome run_catalog(const Json& in, bool conjugate, std::mt19937_64& rng) {
    Json out = Json::array();
    for (auto& e : catalog_from_request(in, "")) {
        if (conjugate) {
            e.action = conjugated(e.action, rng);
            e.source += ", conjugated by a seeded random integer matrix";
        }
        out.push_back(to_json(e));
    }
    return {kOk, out};
}

Outcome run_iso(const Json& in) {
    if (!in.is_object() || !in.contains("a")) throw SchemaError("/a: missing field");
    if (!in.contains("b")) throw SchemaError("/b: missing field");
    const IsoVerdict v = iso_test(action_of(in["a"], "/a"), action_of(in["b"], "/b"));
    return {v.isomorphic ? kOk : kFailed, to_json(v)};
}

Outcome run_enumerate(const Json& in) {
    if (!in.is_object()) throw SchemaError("/: expected an object");
    std::vector<CatalogEntry> entries;
    if (in.contains("catalogs")) {
        const Json& cs = in["catalogs"];
        if (!cs.is_array()) throw SchemaError("/catalogs: expected an array");
        for (size_t i = 0; i < cs.size(); ++i)
            for (auto& e : catalog_from_request(cs[i], "/catalogs/" + std::to_string(i))) entries.push_back(std::move(e));
    }
    if (in.contains("actions")) {
        const Json& as = in["actions"];
        if (!as.is_array()) throw SchemaError("/actions: expected an array");
        for (size_t i = 0; i < as.size(); ++i) {
            const std::string w = "/actions/" + std::to_string(i);
            entries.push_back(CatalogEntry{"input", "action " + std::to_string(i), {}, action_of(as[i], w), w, false});
        }
    }
    if (entries.empty()) throw SchemaError("/: expected \"catalogs\" or \"actions\"");
    return {kOk, to_json(enumerate_and_dedupe(std::move(entries)))};
}

std::string type_name(const std::exception& e) {
    int status = 0;
    std::unique_ptr<char, void (*)(void*)> name(abi::__cxa_demangle(typeid(e).name(), nullptr, nullptr, &status),
                                               std::free);
    std::string s = status == 0 && name ? name.get() : typeid(e).name();
    const auto p = s.rfind("::");
    return p == std::string::npos ? s : s.substr(p + 2);
}

Json error_doc(const std::exception& e) {
    Json d{{"error", type_name(e)}, {"message", e.what()}};
    if (auto* r = dynamic_cast<const RecurrenceInconsistent*>(&e)) d["residual"] = to_json(r->residual);
    if (auto* c = dynamic_cast<const CertificationFailure*>(&e)) d["residual"] = to_json(c->residual);
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact inner Hopf actions on matrix algebras: verify, classify, enumerate"};
    app.require_subcommand(1);
    std::string output;
    unsigned long long seed = 1;
    app.add_option("-o,--output", output, "write the JSON result here instead of stdout");
    app.add_option("--seed", seed, "seed for random conjugators")->capture_default_str();

    std::string input = "-";
    bool conjugate = false;
    auto add = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("input", input, "JSON file, '-' for stdin, or an inline document")->capture_default_str();
        return s;
    };
    auto* verify = add("verify", "certify an action (or catalog entry) against its relations and module-algebra laws");
    auto* actc = add("act", "apply a word to a matrix: {\"action\", \"word\", \"matrix\"}");
    auto* grading = add("grading", "grading induced by the group part, with its kind");
    auto* catalog = add("catalog", "build catalog entries: {\"family\", \"params\"}");
    catalog->add_flag("--conjugate", conjugate, "conjugate each action by a seeded random integer matrix");
    auto* iso = add("iso", "decide isomorphism: {\"a\", \"b\"}");
    auto* enumerate = add("enumerate", "pairwise isomorphism classes: {\"catalogs\", \"actions\"}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kMalformed;
    }

    std::mt19937_64 rng(seed);
    Outcome out;
    try {
        const Json in = load(input);
        if (*verify) out = run_verify(in);
        else if (*actc) out = run_act(in);
        else if (*grading) out = run_grading(in);
        else if (*catalog) out = run_catalog(in, conjugate, rng);
        else if (*iso) out = run_iso(in);
        else if (*enumerate) out = run_enumerate(in);
    } catch (const SchemaError& e) {
        out = {kMalformed, error_doc(e)};
    } catch (const Error& e) {
        out = {kFailed, error_doc(e)};
    }
    if (out.doc.contains("error")) std::cerr << out.doc["error"].get<std::string>() << ": " << out.doc["message"].get<std::string>() << "\n";

    const std::string text = out.doc.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output);
        if (!f) {
            std::cerr << "cannot write " << output << "\n";
            return kMalformed;
        }
        f << text;
    }
    return out.code;
}
