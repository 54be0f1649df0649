#include "ppg/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ppg/errors.hpp"
#include "ppg/oracle.hpp"

namespace ppg {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw Error("malformed JSON");
    }
    return j;
}

Rational rational_from(const json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    throw Error("rational must be a \"num/den\" string");
}

}  // namespace

std::string instance_to_json(const Ppg& g) {
    ordered j;
    j["n"] = g.n();
    j["edges"] = ordered::array();
    for (const auto& e : g.edges()) {
        ordered je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["round"] = e.round;
        je["len"] = e.length.fraction_str();
        j["edges"].push_back(je);
    }
    return j.dump(2) + "\n";
}

Ppg instance_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw Error("instance needs an integer \"n\"");
    }
    Ppg g(j["n"].get<int>());
    if (j.contains("edges")) {
        for (const auto& je : j["edges"]) {
            g.add_edge(je.at("a").get<int>(), je.at("b").get<int>(),
                       je.value("round", 1), rational_from(je.at("len")));
        }
    }
    return g;
}

std::string lengths_to_json(const ThreePathLengths& l) {
    ordered j;
    const CompEdge all[] = {CompEdge::P1P2, CompEdge::P2P3, CompEdge::P3P1,
                            CompEdge::P1Q1, CompEdge::P2Q2, CompEdge::P3Q3,
                            CompEdge::Q1R1, CompEdge::Q2R2, CompEdge::Q3R3,
                            CompEdge::R1S,  CompEdge::R2S,  CompEdge::R3S};
    for (CompEdge e : all) {
        j[comp_edge_name(e)] = l.get(e).fraction_str();
    }
    return j.dump(2) + "\n";
}

ThreePathLengths lengths_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    ThreePathLengths l;
    const CompEdge all[] = {CompEdge::P1P2, CompEdge::P2P3, CompEdge::P3P1,
                            CompEdge::P1Q1, CompEdge::P2Q2, CompEdge::P3Q3,
                            CompEdge::Q1R1, CompEdge::Q2R2, CompEdge::Q3R3,
                            CompEdge::R1S,  CompEdge::R2S,  CompEdge::R3S};
    for (CompEdge e : all) {
        const char* name = comp_edge_name(e);
        if (!j.contains(name)) {
            throw MissingEdgeError(std::string("missing length for ") + name);
        }
        l.get(e) = rational_from(j[name]);
    }
    return l;
}

std::string placement_to_json(const Placement& p) {
    ordered j = ordered::array();
    for (const auto& c : p.coords) {
        j.push_back(c.fraction_str());
    }
    return j.dump() + "\n";
}

Placement placement_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    Placement p;
    for (const auto& c : j) {
        p.coords.push_back(rational_from(c));
    }
    return p;
}

std::string transcript_to_json(const Transcript& t) {
    ordered j;
    j["n"] = t.n;
    j["rounds"] = ordered::array();
    for (const auto& round : t.rounds) {
        ordered jr = ordered::array();
        for (const auto& q : round) {
            ordered jq;
            jq["a"] = q.a;
            jq["b"] = q.b;
            jq["len"] = q.answer.fraction_str();
            jr.push_back(jq);
        }
        j["rounds"].push_back(jr);
    }
    if (t.claim) {
        ordered jc = ordered::array();
        for (const auto& c : t.claim->coords) {
            jc.push_back(c.fraction_str());
        }
        j["claim"] = jc;
    }
    return j.dump(2) + "\n";
}

Transcript transcript_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    Transcript t;
    t.n = j.at("n").get<long>();
    for (const auto& jr : j.at("rounds")) {
        std::vector<QueryRecord> round;
        for (const auto& jq : jr) {
            round.push_back(QueryRecord{jq.at("a").get<int>(), jq.at("b").get<int>(),
                                        rational_from(jq.at("len"))});
        }
        t.rounds.push_back(std::move(round));
    }
    if (j.contains("claim")) {
        Placement p;
        for (const auto& c : j["claim"]) {
            p.coords.push_back(rational_from(c));
        }
        t.claim = p;
    }
    return t;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << content;
}

}  // namespace ppg
