#include "actionwin/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "actionwin/fixtures.hpp"

namespace actionwin::io {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading", path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, "error while reading '" + path + "'", path);
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing", path);
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "error while writing '" + path + "'", path);
}

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        auto pos = what.find("syntax error");
        std::string detail = pos == std::string::npos ? what : what.substr(pos);
        std::string where = source + ":" + std::to_string(line) + ":" + std::to_string(column);
        throw Error(ErrorCode::ParseError, where + ": " + detail, where);
    }
}

Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& message) {
    throw Error(ErrorCode::SchemaError, path + ": " + message, path);
}

// Read-only view of a JSON value together with its path.
struct Node {
    const Json& value;
    std::string path;

    Node key(const std::string& name) const {
        if (!value.is_object()) schema(path, "expected an object");
        auto it = value.find(name);
        if (it == value.end()) schema(path, "missing key '" + name + "'");
        return {*it, path + "." + name};
    }
    bool has(const std::string& name) const { return value.is_object() && value.contains(name); }
    Node item(std::size_t i) const { return {value.at(i), path + "[" + std::to_string(i) + "]"}; }

    void object(std::initializer_list<const char*> allowed) const {
        if (!value.is_object()) schema(path, "expected an object");
        for (const auto& [k, v] : value.items()) {
            if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
                schema(path, "unknown key '" + k + "'");
            }
        }
    }
    std::size_t array() const {
        if (!value.is_array()) schema(path, "expected an array");
        return value.size();
    }
    std::string string() const {
        if (!value.is_string()) schema(path, "expected a string");
        return value.get<std::string>();
    }
    bool boolean() const {
        if (!value.is_boolean()) schema(path, "expected true or false");
        return value.get<bool>();
    }
    long integer() const {
        if (!value.is_number_integer()) schema(path, "expected an integer");
        return value.get<long>();
    }
    // Rational text, or a JSON integer.
    std::string number_text() const {
        if (value.is_number_integer()) return std::to_string(value.get<long>());
        if (value.is_string()) return value.get<std::string>();
        if (value.is_number_float()) schema(path, "floating-point numbers are not exact; write a string such as \"1.05\"");
        schema(path, "expected a rational as a string");
    }
    Rational rational() const {
        try {
            return parse_rational(number_text());
        } catch (const Error& e) {
            schema(path, e.message());
        }
    }
    Action action() const {
        try {
            return parse_action(number_text());
        } catch (const Error& e) {
            schema(path, e.message());
        }
    }
    Scalar scalar(const FieldSpec& field) const {
        try {
            return Scalar::parse(field, number_text());
        } catch (const Error& e) {
            schema(path, e.message());
        }
    }
};

FieldSpec field_of(const Node& n) {
    try {
        return FieldSpec::parse(n.string());
    } catch (const Error& e) {
        schema(n.path, e.message());
    }
}

ChainVector chain_from(const Node& n, const FieldSpec& field, const char* id_key = "id") {
    ChainVector v;
    std::size_t len = n.array();
    for (std::size_t i = 0; i < len; ++i) {
        Node t = n.item(i);
        t.object({id_key, "coeff"});
        Scalar c = t.has("coeff") ? t.key("coeff").scalar(field) : Scalar::one(field);
        v.add(t.key(id_key).string(), c);
    }
    return v;
}

Json chain_to_json(const ChainVector& v) {
    Json out = Json::array();
    for (const auto& [id, c] : v.terms()) out.push_back({{"id", id}, {"coeff", c.to_string()}});
    return out;
}

Generator generator_from(const Node& n) {
    n.object({"id", "action", "degree"});
    return {n.key("id").string(), n.key("action").rational(), static_cast<int>(n.key("degree").integer())};
}

Json generator_to_json(const Generator& g) {
    return {{"id", g.id}, {"action", to_string(g.action)}, {"degree", g.degree}};
}

// Library errors raised while assembling a document keep their code but
// gain the document path.
template <typename F>
auto at_path(const std::string& path, F&& build) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SchemaError || e.code() == ErrorCode::ParseError) throw;
        throw Error(e.code(), path + ": " + e.message(), e.witness());
    }
}

FilteredComplex complex_from(const Node& n) {
    n.object({"field", "window", "generators", "differential"});
    FieldSpec field = field_of(n.key("field"));
    Window window;
    if (n.has("window")) {
        Node w = n.key("window");
        if (w.array() != 2) schema(w.path, "expected [lower, upper]");
        window = Window{w.item(0).action(), w.item(1).action()};
    }
    std::vector<Generator> gens;
    Node g = n.key("generators");
    for (std::size_t i = 0, len = g.array(); i < len; ++i) gens.push_back(generator_from(g.item(i)));
    std::map<std::string, ChainVector> diff;
    if (n.has("differential")) {
        Node d = n.key("differential");
        if (!d.value.is_object()) schema(d.path, "expected an object");
        for (const auto& [id, terms] : d.value.items()) {
            ChainVector v = chain_from(Node{terms, d.path + "." + id}, field);
            if (!v.is_zero()) diff.emplace(id, std::move(v));
        }
    }
    return at_path(n.path, [&] { return FilteredComplex::build(field, window, std::move(gens), diff); });
}

AlgebraElement element_from(const Node& n, const FieldSpec& field) {
    AlgebraElement x(field);
    for (std::size_t i = 0, len = n.array(); i < len; ++i) {
        Node t = n.item(i);
        t.object({"coeff", "word"});
        Scalar c = t.has("coeff") ? t.key("coeff").scalar(field) : Scalar::one(field);
        Word w;
        Node letters = t.key("word");
        for (std::size_t j = 0, m = letters.array(); j < m; ++j) w.push_back(letters.item(j).string());
        x.add(w, c);
    }
    return x;
}

Json element_to_json(const AlgebraElement& x) {
    Json out = Json::array();
    for (const auto& [w, c] : x.terms()) out.push_back({{"coeff", c.to_string()}, {"word", w}});
    return out;
}

std::string kind_text(const TimelineItem& item) {
    if (std::holds_alternative<DriftSegment>(item)) return "drift";
    static const char* names[] = {"handle_slide", "birth", "death", "exit_below", "entry_below", "exit_above", "entry_above"};
    return names[std::get<SingularEvent>(item).kind.index()];
}

TimelineItem item_from(const Node& n, const FieldSpec& field) {
    std::string type = n.key("type").string();
    if (type == "drift") {
        n.object({"type", "t0", "t1", "rates", "lower_rate", "upper_rate", "window_follows_oscillation", "monitored_gaps"});
        DriftSegment d{n.key("t0").rational(), n.key("t1").rational(), {}, 0, 0, false, {}};
        if (n.has("rates")) {
            Node r = n.key("rates");
            if (!r.value.is_object()) schema(r.path, "expected an object");
            for (const auto& [id, v] : r.value.items()) d.rates[id] = Node{v, r.path + "." + id}.rational();
        }
        if (n.has("lower_rate")) d.lower_rate = n.key("lower_rate").rational();
        if (n.has("upper_rate")) d.upper_rate = n.key("upper_rate").rational();
        if (n.has("window_follows_oscillation")) d.window_follows_oscillation = n.key("window_follows_oscillation").boolean();
        if (n.has("monitored_gaps")) {
            Node gaps = n.key("monitored_gaps");
            for (std::size_t i = 0, len = gaps.array(); i < len; ++i) {
                Node pair = gaps.item(i);
                if (pair.array() != 2) schema(pair.path, "expected [x, y]");
                d.monitored_gaps.emplace_back(pair.item(0).string(), pair.item(1).string());
            }
        }
        if (!(d.t0 < d.t1)) schema(n.path, "t0 must be less than t1");
        return d;
    }
    Rational time = n.key("time").rational();
    auto unit = [&](const char* key) { return n.has(key) ? n.key(key).scalar(field) : Scalar::one(field); };
    if (type == "handle_slide") {
        n.object({"type", "time", "target", "addend", "unit"});
        return SingularEvent{time, HandleSlide{n.key("target").string(), chain_from(n.key("addend"), field), unit("unit")}};
    }
    if (type == "birth") {
        n.object({"type", "time", "x", "y", "degree_x", "action", "unit"});
        return SingularEvent{time, Birth{n.key("x").string(), n.key("y").string(),
                                         static_cast<int>(n.key("degree_x").integer()), n.key("action").rational(),
                                         unit("unit")}};
    }
    if (type == "death") {
        n.object({"type", "time", "x", "y"});
        return SingularEvent{time, Death{n.key("x").string(), n.key("y").string()}};
    }
    if (type == "exit_below") {
        n.object({"type", "time", "id"});
        return SingularEvent{time, ExitBelow{n.key("id").string()}};
    }
    if (type == "exit_above") {
        n.object({"type", "time", "id"});
        return SingularEvent{time, ExitAbove{n.key("id").string()}};
    }
    if (type == "entry_below") {
        n.object({"type", "time", "generator", "incoming"});
        ChainVector incoming = n.has("incoming") ? chain_from(n.key("incoming"), field) : ChainVector{};
        return SingularEvent{time, EntryBelow{generator_from(n.key("generator")), incoming}};
    }
    if (type == "entry_above") {
        n.object({"type", "time", "generator", "boundary"});
        ChainVector boundary = n.has("boundary") ? chain_from(n.key("boundary"), field) : ChainVector{};
        return SingularEvent{time, EntryAbove{generator_from(n.key("generator")), boundary}};
    }
    schema(n.key("type").path, "unknown item type '" + type + "'");
}

Json item_to_json(const TimelineItem& item) {
    Json out{{"type", kind_text(item)}};
    if (auto d = std::get_if<DriftSegment>(&item)) {
        out["t0"] = to_string(d->t0);
        out["t1"] = to_string(d->t1);
        Json rates = Json::object();
        for (const auto& [id, r] : d->rates) rates[id] = to_string(r);
        out["rates"] = rates;
        if (d->lower_rate != 0) out["lower_rate"] = to_string(d->lower_rate);
        if (d->upper_rate != 0) out["upper_rate"] = to_string(d->upper_rate);
        if (d->window_follows_oscillation) out["window_follows_oscillation"] = true;
        if (!d->monitored_gaps.empty()) {
            Json gaps = Json::array();
            for (const auto& [x, y] : d->monitored_gaps) gaps.push_back({x, y});
            out["monitored_gaps"] = gaps;
        }
        return out;
    }
    const auto& ev = std::get<SingularEvent>(item);
    out["time"] = to_string(ev.time);
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, HandleSlide>) {
                out["target"] = k.target;
                out["addend"] = chain_to_json(k.addend);
                out["unit"] = k.unit.to_string();
            } else if constexpr (std::is_same_v<K, Birth>) {
                out["x"] = k.x;
                out["y"] = k.y;
                out["degree_x"] = k.degree_x;
                out["action"] = to_string(k.action);
                out["unit"] = k.unit.to_string();
            } else if constexpr (std::is_same_v<K, Death>) {
                out["x"] = k.x;
                out["y"] = k.y;
            } else if constexpr (std::is_same_v<K, ExitBelow> || std::is_same_v<K, ExitAbove>) {
                out["id"] = k.id;
            } else if constexpr (std::is_same_v<K, EntryBelow>) {
                out["generator"] = generator_to_json(k.generator);
                out["incoming"] = chain_to_json(k.incoming);
            } else {
                out["generator"] = generator_to_json(k.generator);
                out["boundary"] = chain_to_json(k.boundary);
            }
        },
        ev.kind);
    return out;
}

}  // namespace

FilteredComplex complex_from_json(const Json& doc) { return complex_from(Node{doc, "$"}); }

Json to_json(const FilteredComplex& complex) {
    Json gens = Json::array();
    for (const auto& g : complex.generators()) gens.push_back(generator_to_json(g));
    Json diff = Json::object();
    for (const auto& g : complex.generators()) {
        const auto& b = complex.boundary(g.id);
        if (!b.is_zero()) diff[g.id] = chain_to_json(b);
    }
    return {{"field", complex.field().tag()},
            {"window", {to_string(complex.window().lower), to_string(complex.window().upper)}},
            {"generators", gens},
            {"differential", diff}};
}

ChordDGA dga_from_json(const Json& doc) {
    Node n{doc, "$"};
    n.object({"field", "chords", "differential"});
    FieldSpec field = field_of(n.key("field"));
    std::vector<Chord> chords;
    Node cs = n.key("chords");
    for (std::size_t i = 0, len = cs.array(); i < len; ++i) {
        Node c = cs.item(i);
        c.object({"label", "length", "degree", "component", "kind", "ends"});
        std::string kind = c.has("kind") ? c.key("kind").string() : "pure";
        std::string label = c.key("label").string();
        Rational length = c.key("length").rational();
        int degree = static_cast<int>(c.key("degree").integer());
        if (kind == "pure") {
            int component = c.has("component") ? static_cast<int>(c.key("component").integer()) : 0;
            chords.push_back(Chord::pure(label, length, degree, component));
        } else if (kind == "mixed") {
            int from = 0, to = 1;
            if (c.has("ends")) {
                Node ends = c.key("ends");
                if (ends.array() != 2) schema(ends.path, "expected [start component, end component]");
                from = static_cast<int>(ends.item(0).integer());
                to = static_cast<int>(ends.item(1).integer());
            }
            chords.push_back(Chord::mixed(label, length, degree, from, to));
        } else {
            schema(c.key("kind").path, "kind must be \"pure\" or \"mixed\"");
        }
    }
    std::map<std::string, AlgebraElement> diff;
    if (n.has("differential")) {
        Node d = n.key("differential");
        if (!d.value.is_object()) schema(d.path, "expected an object");
        for (const auto& [label, terms] : d.value.items()) {
            AlgebraElement x = element_from(Node{terms, d.path + "." + label}, field);
            if (!x.is_zero()) diff.emplace(label, std::move(x));
        }
    }
    return at_path("$", [&] { return ChordDGA::build(field, std::move(chords), std::move(diff)); });
}

Json to_json(const ChordDGA& dga) {
    Json chords = Json::array();
    for (const auto& c : dga.chords()) {
        Json j{{"label", c.label}, {"length", to_string(c.length)}, {"degree", c.degree}};
        if (c.is_pure()) {
            j["kind"] = "pure";
            j["component"] = c.component();
        } else {
            j["kind"] = "mixed";
            j["ends"] = {c.ends[0], c.ends[1]};
        }
        chords.push_back(j);
    }
    Json diff = Json::object();
    for (const auto& [label, x] : dga.differential_map()) {
        if (!x.is_zero()) diff[label] = element_to_json(x);
    }
    return {{"field", dga.field().tag()}, {"chords", chords}, {"differential", diff}};
}

Augmentation augmentation_from_json(const Json& doc, const FieldSpec& field) {
    if (!doc.is_object()) schema("$", "expected an object {label: value}");
    Augmentation eps;
    for (const auto& [label, v] : doc.items()) {
        Scalar s = Node{v, "$." + label}.scalar(field);
        if (!s.is_zero()) eps.emplace(label, s);
    }
    return eps;
}

Json to_json(const Augmentation& eps) {
    Json out = Json::object();
    for (const auto& [label, v] : eps) out[label] = v.to_string();
    return out;
}

Timeline timeline_from_json(const Json& doc) {
    Node n{doc, "$"};
    n.object({"initial", "start_time", "items"});
    FilteredComplex initial = complex_from(n.key("initial"));
    Rational start = n.has("start_time") ? n.key("start_time").rational() : Rational(0);
    std::vector<TimelineItem> items;
    if (n.has("items")) {
        Node list = n.key("items");
        for (std::size_t i = 0, len = list.array(); i < len; ++i) items.push_back(item_from(list.item(i), initial.field()));
    }
    return Timeline{initial, start, std::move(items)};
}

Json to_json(const Timeline& timeline) {
    Json items = Json::array();
    for (const auto& item : timeline.items) items.push_back(item_to_json(item));
    return {{"initial", to_json(timeline.initial)}, {"start_time", to_string(timeline.start_time)}, {"items", items}};
}

Barcode barcode_from_json(const Json& doc) {
    Node n{doc, "$"};
    Barcode bars;
    for (std::size_t i = 0, len = n.array(); i < len; ++i) {
        Node b = n.item(i);
        b.object({"start", "end", "degree"});
        Bar bar{b.key("start").action(), b.key("end").action(), static_cast<int>(b.key("degree").integer())};
        if (!bar.start.is_finite()) schema(b.key("start").path, "bar start must be finite");
        if (!(bar.start < bar.end)) schema(b.path, "bar start must be below its end");
        bars.push_back(bar);
    }
    return sorted(std::move(bars));
}

Json to_json(const Barcode& bars) {
    Json out = Json::array();
    for (const auto& b : bars) out.push_back({{"start", to_string(b.start)}, {"end", to_string(b.end)}, {"degree", b.degree}});
    return out;
}

SigmaProfile sigma_from_json(const Json& doc) {
    Node root{doc, "$"};
    if (doc.is_object()) root.object({"sigma"});
    Node n = doc.is_object() ? root.key("sigma") : root;
    SigmaProfile p;
    for (std::size_t i = 0, len = n.array(); i < len; ++i) p.sigma.push_back(n.item(i).action());
    return p;
}

BettiProfile betti_from_json(const Json& doc) {
    Node root{doc, "$"};
    if (doc.is_object()) root.object({"betti"});
    Node n = doc.is_object() ? root.key("betti") : root;
    BettiProfile p;
    for (std::size_t i = 0, len = n.array(); i < len; ++i) p.betti.push_back(n.item(i).integer());
    return p;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        auto b = cur.find_first_not_of(" \t\r");
        auto e = cur.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

SigmaProfile parse_sigma_list(const std::string& text) {
    SigmaProfile p;
    for (const auto& item : split(text, ',')) p.sigma.push_back(parse_action(item));
    return p;
}

BettiProfile parse_betti_list(const std::string& text) {
    BettiProfile p;
    for (const auto& item : split(text, ',')) {
        Rational v = parse_rational(item);
        if (v.get_den() != 1) throw Error(ErrorCode::ParseError, "Betti number '" + item + "' is not an integer", item);
        p.betti.push_back(v.get_num().get_si());
    }
    return p;
}

OscillationProfile<Rational> profile_from_csv(const std::string& text, const std::string& source) {
    std::vector<ProfileSample<Rational>> samples;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto fields = split(line, ',');
        if (fields.empty() || (fields.size() == 1 && fields[0].empty()) || fields[0].rfind('#', 0) == 0) continue;
        std::string where = source + ":" + std::to_string(number);
        if (fields.size() != 3) throw Error(ErrorCode::ParseError, where + ": expected t,max,min", where);
        try {
            samples.push_back({parse_rational(fields[0]), parse_rational(fields[1]), parse_rational(fields[2])});
        } catch (const Error& e) {
            if (samples.empty() && number == 1) continue;  // header
            throw Error(ErrorCode::ParseError, where + ": " + e.message(), where);
        }
    }
    return OscillationProfile<Rational>(std::move(samples));
}

std::string barcode_table(const Barcode& bars) {
    std::string out;
    for (const auto& b : bars) out += to_string(b) + "\n";
    return out;
}

std::string barcode_csv(const Barcode& bars) {
    std::string out = "start,end,degree\n";
    for (const auto& b : bars) out += to_string(b.start) + "," + to_string(b.end) + "," + std::to_string(b.degree) + "\n";
    return out;
}

std::string bar_diagram(const Barcode& bars, std::size_t width) {
    if (bars.empty()) return "(empty barcode)\n";
    width = std::max<std::size_t>(width, 10);
    Rational lo = bars.front().start.value();
    Rational hi = lo;
    for (const auto& b : bars) {
        lo = std::min(lo, b.start.value());
        hi = std::max(hi, b.start.value());
        if (b.end.is_finite()) hi = std::max(hi, b.end.value());
    }
    if (hi == lo) hi = lo + 1;
    auto column = [&](const Rational& x) {
        Rational pos = (x - lo) / (hi - lo) * Rational(static_cast<long>(width - 1));
        mpz_class whole = pos.get_num() / pos.get_den();
        return static_cast<std::size_t>(whole.get_ui());
    };
    std::size_t label_width = 0;
    for (const auto& b : bars) label_width = std::max(label_width, to_string(b).size());
    std::string out = std::string(label_width, ' ') + "  " + to_string(lo) + " .. " + to_string(hi) + "\n";
    for (const auto& b : bars) {
        std::string row(width, ' ');
        std::size_t s = column(b.start.value());
        std::size_t e = b.end.is_finite() ? column(b.end.value()) : width - 1;
        for (std::size_t i = s; i <= e && i < width; ++i) row[i] = '=';
        if (b.end.is_finite()) {
            if (e > s) row[e] = ')';
        } else {
            row[width - 1] = '>';
        }
        row[s] = '[';
        std::string label = to_string(b);
        label.resize(label_width, ' ');
        auto last = row.find_last_not_of(' ');
        out += label + "  " + row.substr(0, last + 1) + "\n";
    }
    return out;
}

std::string vineyard_csv(const std::vector<VineyardRow>& rows) {
    std::string out = "t,bar_id,start,end,degree\n";
    for (const auto& r : rows) {
        out += to_string(r.time) + "," + std::to_string(r.bar_id) + "," + to_string(r.start) + "," + to_string(r.end) +
               "," + std::to_string(r.degree) + "\n";
    }
    return out;
}

Json fixture_document(const std::string& name, const FieldSpec& field) {
    using namespace fixtures;
    if (name == "one_generator") return to_json(one_generator(field));
    if (name == "acyclic_pair") return to_json(acyclic_pair(field));
    if (name == "four_generator") return to_json(four_generator(field));
    if (name == "equal_action_pair") return to_json(equal_action_pair(field));
    if (name == "handle_slide_timeline") return to_json(handle_slide_timeline(field));
    if (name == "birth_timeline") return to_json(birth_timeline(field));
    if (name == "death_timeline") return to_json(death_timeline(field));
    if (name == "exit_below_timeline") return to_json(exit_below_timeline(field));
    if (name == "bifurcation_tour") return to_json(bifurcation_tour(field));
    if (name == "simultaneous_events") return to_json(simultaneous_events(field));
    if (name == "mixed_pair") return to_json(mixed_pair(field));
    if (name == "mixed_pair_with_pure") {
        auto f = mixed_pair_with_pure(field);
        return {{"dga", to_json(f.dga)}, {"augmentation", to_json(f.augmentation)}};
    }
    if (name == "standard_unknot_shape") return to_json(standard_unknot_shape(field));
    if (name == "stabilized_unknot_shape") return to_json(stabilized_unknot_shape(field));
    if (name == "two_copy_template") return to_json(two_copy_template(field));
    throw Error(ErrorCode::SchemaError, "unknown fixture '" + name + "'", name);
}

}  // namespace actionwin::io
