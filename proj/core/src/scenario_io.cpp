#include "evacsim/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace evacsim {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw ScenarioParseError("scenario: " + path + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) bad(path.empty() ? key : path + "." + key, "unknown key");
    }
}

const json* find(const json& obj, const char* key) {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

void read_number(const json& obj, const std::string& path, const char* key, double& out) {
    if (const json* v = find(obj, key)) {
        if (!v->is_number()) bad(path + key, "expected a number");
        out = v->get<double>();
    }
}

void read_int(const json& obj, const std::string& path, const char* key, int& out) {
    if (const json* v = find(obj, key)) {
        if (!v->is_number_integer()) bad(path + key, "expected an integer");
        out = v->get<int>();
    }
}

void read_u64(const json& obj, const std::string& path, const char* key, std::uint64_t& out) {
    if (const json* v = find(obj, key)) {
        if (!v->is_number_unsigned() && !v->is_number_integer()) {
            bad(path + key, "expected an unsigned integer");
        }
        if (v->is_number_integer() && v->get<std::int64_t>() < 0) {
            bad(path + key, "expected an unsigned integer");
        }
        out = v->get<std::uint64_t>();
    }
}

void read_bool(const json& obj, const std::string& path, const char* key, bool& out) {
    if (const json* v = find(obj, key)) {
        if (!v->is_boolean()) bad(path + key, "expected a boolean");
        out = v->get<bool>();
    }
}

void read_string(const json& obj, const std::string& path, const char* key, std::string& out) {
    if (const json* v = find(obj, key)) {
        if (!v->is_string()) bad(path + key, "expected a string");
        out = v->get<std::string>();
    }
}

ExitLayout parse_exits(const std::string& s) {
    if (s == "four_corners") return ExitLayout::FourCorners;
    if (s == "six_exits") return ExitLayout::SixExits;
    throw ScenarioParseError("scenario: layout.exits: expected \"four_corners\" or \"six_exits\", got \"" + s + "\"");
}

ExitRestriction parse_restriction(const std::string& s) {
    if (s == "unrestricted") return ExitRestriction::Unrestricted;
    if (s == "split_access") return ExitRestriction::SplitAccess;
    throw ScenarioParseError("scenario: layout.restriction: expected \"unrestricted\" or \"split_access\", got \"" + s + "\"");
}

Placement parse_placement(const std::string& s) {
    if (s == "none") return Placement::None;
    if (s == "front") return Placement::Front;
    if (s == "middle") return Placement::Middle;
    if (s == "random") return Placement::Random;
    throw ScenarioParseError("scenario: population.placement: expected \"none\", \"front\", \"middle\" or \"random\", got \"" + s + "\"");
}

const char* exits_name(ExitLayout e) {
    return e == ExitLayout::FourCorners ? "four_corners" : "six_exits";
}

const char* restriction_name(ExitRestriction r) {
    return r == ExitRestriction::Unrestricted ? "unrestricted" : "split_access";
}

const char* placement_name(Placement p) {
    switch (p) {
        case Placement::None: return "none";
        case Placement::Front: return "front";
        case Placement::Middle: return "middle";
        case Placement::Random: return "random";
    }
    return "none";
}

void read_body(const json& obj, const std::string& path, BodyConfig& out) {
    reject_unknown_keys(obj, path, {"radius", "mass"});
    read_number(obj, path + ".", "radius", out.radius);
    read_number(obj, path + ".", "mass", out.mass);
}

}  // namespace

ScenarioConfig parse_scenario_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioParseError(std::string("scenario: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ScenarioParseError("scenario: top level must be an object");

    ScenarioConfig c;
    reject_unknown_keys(doc, "", {"label", "seed", "room", "layout", "population", "bodies", "sim"});

    read_string(doc, "", "label", c.label);
    read_u64(doc, "", "seed", c.seed);

    if (const json* room = find(doc, "room")) {
        if (!room->is_object()) bad("room", "expected an object");
        reject_unknown_keys(*room, "room", {"width", "height"});
        read_number(*room, "room.", "width", c.room_width);
        read_number(*room, "room.", "height", c.room_height);
    }

    if (const json* layout = find(doc, "layout")) {
        if (!layout->is_object()) bad("layout", "expected an object");
        reject_unknown_keys(*layout, "layout", {"exits", "restriction", "restricted_openings_solid"});
        std::string exits = exits_name(c.exits);
        std::string restriction = restriction_name(c.restriction);
        read_string(*layout, "layout.", "exits", exits);
        read_string(*layout, "layout.", "restriction", restriction);
        read_bool(*layout, "layout.", "restricted_openings_solid", c.restricted_openings_solid);
        c.exits = parse_exits(exits);
        c.restriction = parse_restriction(restriction);
    }

    if (const json* population = find(doc, "population")) {
        if (!population->is_object()) bad("population", "expected an object");
        reject_unknown_keys(*population, "population", {"n_total", "n_disabled", "placement"});
        read_int(*population, "population.", "n_total", c.n_total);
        read_int(*population, "population.", "n_disabled", c.n_disabled);
        std::string placement = placement_name(c.placement);
        read_string(*population, "population.", "placement", placement);
        c.placement = parse_placement(placement);
    }

    if (const json* bodies = find(doc, "bodies")) {
        if (!bodies->is_object()) bad("bodies", "expected an object");
        reject_unknown_keys(*bodies, "bodies", {"able", "disabled", "base_speed"});
        if (const json* able = find(*bodies, "able")) {
            if (!able->is_object()) bad("bodies.able", "expected an object");
            read_body(*able, "bodies.able", c.able);
        }
        if (const json* disabled = find(*bodies, "disabled")) {
            if (!disabled->is_object()) bad("bodies.disabled", "expected an object");
            read_body(*disabled, "bodies.disabled", c.disabled);
        }
        read_number(*bodies, "bodies.", "base_speed", c.base_speed);
    }

    if (const json* sim = find(doc, "sim")) {
        if (!sim->is_object()) bad("sim", "expected an object");
        reject_unknown_keys(*sim, "sim",
                            {"p_fall", "p_recover", "max_steps", "solver_iterations",
                             "penetration_tolerance", "target_midpoint", "can_fall"});
        read_number(*sim, "sim.", "p_fall", c.sim.p_fall);
        read_number(*sim, "sim.", "p_recover", c.sim.p_recover);
        read_int(*sim, "sim.", "max_steps", c.sim.max_steps);
        read_int(*sim, "sim.", "solver_iterations", c.sim.solver_iterations);
        read_number(*sim, "sim.", "penetration_tolerance", c.sim.penetration_tolerance);
        read_bool(*sim, "sim.", "target_midpoint", c.sim.target_midpoint);
        read_bool(*sim, "sim.", "can_fall", c.can_fall);
    }

    return c;
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioParseError("scenario: cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scenario_json(buffer.str());
    } catch (const ScenarioParseError& e) {
        throw ScenarioParseError(path + ": " + e.what());
    }
}

std::string scenario_to_json(const ScenarioConfig& c) {
    json doc;
    doc["label"] = c.label;
    doc["seed"] = c.seed;
    doc["room"] = {{"width", c.room_width}, {"height", c.room_height}};
    doc["layout"] = {{"exits", exits_name(c.exits)},
                     {"restriction", restriction_name(c.restriction)},
                     {"restricted_openings_solid", c.restricted_openings_solid}};
    doc["population"] = {{"n_total", c.n_total},
                         {"n_disabled", c.n_disabled},
                         {"placement", placement_name(c.placement)}};
    doc["bodies"] = {{"able", {{"radius", c.able.radius}, {"mass", c.able.mass}}},
                     {"disabled", {{"radius", c.disabled.radius}, {"mass", c.disabled.mass}}},
                     {"base_speed", c.base_speed}};
    doc["sim"] = {{"p_fall", c.sim.p_fall},
                  {"p_recover", c.sim.p_recover},
                  {"max_steps", c.sim.max_steps},
                  {"solver_iterations", c.sim.solver_iterations},
                  {"penetration_tolerance", c.sim.penetration_tolerance},
                  {"target_midpoint", c.sim.target_midpoint},
                  {"can_fall", c.can_fall}};
    return doc.dump(2) + "\n";
}

}  // namespace evacsim
