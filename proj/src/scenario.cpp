#include "msaw/scenario.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <stdexcept>

using nlohmann::json;

namespace msaw {
namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what)
{
    throw std::invalid_argument("scenario: " + path + ": " + what);
}

// Key-checked view of one JSON object level.
class Node {
public:
    Node(const json& j, std::string path, bool strict, std::vector<std::string>* warnings)
        : j_(j), path_(std::move(path)), strict_(strict), warnings_(warnings)
    {
        if (!j_.is_object())
            bad(path_, "expected an object");
    }

    ~Node() = default;

    bool has(const std::string& key)
    {
        seen_.insert(key);
        return j_.contains(key) && !j_.at(key).is_null();
    }

    template <class T>
    T get(const std::string& key, T fallback)
    {
        if (!has(key))
            return fallback;
        try {
            return j_.at(key).get<T>();
        } catch (const json::exception&) {
            bad(path_ + "." + key, "wrong type");
        }
    }

    const json& raw(const std::string& key)
    {
        seen_.insert(key);
        return j_.at(key);
    }

    void finish()
    {
        for (auto& [key, value] : j_.items()) {
            if (seen_.count(key))
                continue;
            if (strict_)
                bad(path_ + "." + key, "unknown key");
            if (warnings_)
                warnings_->push_back("ignoring unknown key " + path_ + "." + key);
        }
    }

    std::string path(const std::string& key) const { return path_ + "." + key; }

private:
    const json& j_;
    std::string path_;
    bool strict_;
    std::vector<std::string>* warnings_;
    std::set<std::string> seen_;
};

PathKind parse_path_kind(const std::string& s, const std::string& path)
{
    if (s == "bare")
        return PathKind::bare;
    if (s == "coated")
        return PathKind::coated;
    bad(path, "expected \"bare\" or \"coated\"");
}

GateWindow parse_gate_window(const std::string& s, const std::string& path)
{
    if (s == "rectangular")
        return GateWindow::rectangular;
    if (s == "cosine_tapered")
        return GateWindow::cosine_tapered;
    bad(path, "expected \"rectangular\" or \"cosine_tapered\"");
}

Material parse_material(const json& j, const std::string& path, bool strict,
                        std::vector<std::string>* warnings)
{
    Node n(j, path, strict, warnings);
    std::string name = n.get<std::string>("name", "");
    Material m;
    if (name == "LiNbO3") {
        m = builtin_material(name);
        m.shear_stiffness = kSubstrateEffectiveMu;
    } else if (name == "ZnO") {
        m = builtin_material(name);
        m.shear_stiffness = kZnOEffectiveMu;
    } else if (name == "CoFeB") {
        m = builtin_material(name);
        m.shear_stiffness = kCoFeBEffectiveMu;
    } else {
        m.name = name;
    }
    m.density = n.get<double>("density_kg_m3", m.density);
    if (n.has("shear_stiffness_pa"))
        m.shear_stiffness = n.get<double>("shear_stiffness_pa", 0.0);
    n.finish();
    if (m.density <= 0.0)
        bad(path + ".density_kg_m3", "density must be > 0");
    if (!m.shear_stiffness || *m.shear_stiffness <= 0.0)
        bad(path + ".shear_stiffness_pa", "effective shear stiffness must be set and > 0");
    return m;
}

} // namespace

Scenario load_scenario(const std::string& json_text, bool strict, std::vector<std::string>* warnings)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario: JSON syntax error: ") + e.what());
    }

    Scenario sc;
    Node root(doc, "$", strict, warnings);

    if (root.has("geometry")) {
        Node g(root.raw("geometry"), "$.geometry", strict, warnings);
        sc.geometry.wavelength = g.get<double>("wavelength_m", sc.geometry.wavelength);
        sc.geometry.idt_pairs = g.get<int>("idt_pairs", sc.geometry.idt_pairs);
        sc.geometry.metallization_ratio = g.get<double>("metallization_ratio", sc.geometry.metallization_ratio);
        sc.geometry.path1_wavelengths = g.get<double>("path1_wavelengths", sc.geometry.path1_wavelengths);
        sc.geometry.path2_wavelengths = g.get<double>("path2_wavelengths", sc.geometry.path2_wavelengths);
        sc.geometry.reflector_count = g.get<int>("reflector_count", sc.geometry.reflector_count);
        if (g.has("echoes")) {
            const json& je = g.raw("echoes");
            if (!je.is_array())
                bad("$.geometry.echoes", "expected an array");
            sc.geometry.echoes.clear();
            int idx = 0;
            for (auto& item : je) {
                std::string path = "$.geometry.echoes[" + std::to_string(idx++) + "]";
                Node e(item, path, strict, warnings);
                EchoSpec spec;
                spec.id = e.get<int>("id", idx);
                spec.amplitude_db = e.get<double>("amplitude_db", 0.0);
                spec.polarity = e.get<int>("polarity", 1);
                if (!e.has("segments"))
                    bad(path + ".segments", "required");
                const json& js = e.raw("segments");
                if (!js.is_array() || js.empty())
                    bad(path + ".segments", "expected a non-empty array");
                int sidx = 0;
                for (auto& sj : js) {
                    std::string spath = path + ".segments[" + std::to_string(sidx++) + "]";
                    Node s(sj, spath, strict, warnings);
                    EchoSegment seg;
                    seg.length_wavelengths = s.get<double>("length_wavelengths", 0.0);
                    seg.kind = parse_path_kind(s.get<std::string>("path", "bare"), spath + ".path");
                    s.finish();
                    if (seg.length_wavelengths <= 0.0)
                        bad(spath + ".length_wavelengths", "must be > 0");
                    spec.segments.push_back(seg);
                }
                if (spec.polarity != 1 && spec.polarity != -1)
                    bad(path + ".polarity", "must be +1 or -1");
                e.finish();
                sc.geometry.echoes.push_back(spec);
            }
        }
        g.finish();
        if (sc.geometry.wavelength <= 0.0)
            bad("$.geometry.wavelength_m", "wavelength must be > 0");
        if (sc.geometry.idt_pairs < 1)
            bad("$.geometry.idt_pairs", "must be >= 1");
        if (sc.geometry.path1_wavelengths <= 0.0 || sc.geometry.path2_wavelengths <= 0.0)
            bad("$.geometry", "path lengths must be > 0");
    }

    if (root.has("stack")) {
        Node st(root.raw("stack"), "$.stack", strict, warnings);
        LayerStack stack;
        if (!st.has("substrate"))
            bad("$.stack.substrate", "required");
        stack.substrate = parse_material(st.raw("substrate"), "$.stack.substrate", strict, warnings);
        if (st.has("layers")) {
            const json& jl = st.raw("layers");
            if (!jl.is_array())
                bad("$.stack.layers", "expected an array");
            int idx = 0;
            for (auto& lj : jl) {
                std::string path = "$.stack.layers[" + std::to_string(idx++) + "]";
                Node l(lj, path, strict, warnings);
                Layer layer;
                if (!l.has("material"))
                    bad(path + ".material", "required");
                layer.material = parse_material(l.raw("material"), path + ".material", strict, warnings);
                layer.thickness = l.get<double>("thickness_m", 0.0);
                l.finish();
                if (layer.thickness <= 0.0)
                    bad(path + ".thickness_m", "must be > 0");
                stack.layers.push_back(layer);
            }
        }
        st.finish();
        sc.stack = stack;
    }

    if (root.has("physics")) {
        Node p(root.raw("physics"), "$.physics", strict, warnings);
        sc.physics.v1_nominal = p.get<double>("v1_nominal_mps", sc.physics.v1_nominal);
        sc.physics.v2_nominal = p.get<double>("v2_nominal_mps", sc.physics.v2_nominal);
        sc.physics.tcf1_ppm_per_c = p.get<double>("tcf1_ppm_per_c", sc.physics.tcf1_ppm_per_c);
        sc.physics.tcf2_ppm_per_c = p.get<double>("tcf2_ppm_per_c", sc.physics.tcf2_ppm_per_c);
        if (p.has("magnetoelastic")) {
            Node m(p.raw("magnetoelastic"), "$.physics.magnetoelastic", strict, warnings);
            auto& mm = sc.physics.magnetoelastic;
            mm.slope_ppm_per_mt = m.get<double>("slope_ppm_per_mt", mm.slope_ppm_per_mt);
            mm.h_low_mt = m.get<double>("h_low_mt", mm.h_low_mt);
            mm.h_high_mt = m.get<double>("h_high_mt", mm.h_high_mt);
            mm.smoothing_mt = m.get<double>("smoothing_mt", mm.smoothing_mt);
            mm.h_ref_mt = m.get<double>("h_ref_mt", mm.h_ref_mt);
            m.finish();
            mm.validate();
        }
        p.finish();
        if (sc.physics.v1_nominal <= 0.0 || sc.physics.v2_nominal <= 0.0)
            bad("$.physics", "nominal velocities must be > 0");
    }

    if (root.has("environment")) {
        Node e(root.raw("environment"), "$.environment", strict, warnings);
        sc.environment.temperature_c = e.get<double>("temperature_c", sc.environment.temperature_c);
        sc.environment.field_mt = e.get<double>("field_mt", sc.environment.field_mt);
        sc.environment.reference_temperature_c =
            e.get<double>("reference_temperature_c", sc.environment.reference_temperature_c);
        e.finish();
    }

    if (root.has("grid")) {
        Node g(root.raw("grid"), "$.grid", strict, warnings);
        sc.grid.f_start = g.get<double>("f_start_hz", sc.grid.f_start);
        sc.grid.f_stop = g.get<double>("f_stop_hz", sc.grid.f_stop);
        sc.grid.n_points = g.get<int>("n_points", sc.grid.n_points);
        g.finish();
        if (!(sc.grid.f_start < sc.grid.f_stop) || sc.grid.n_points < 2)
            bad("$.grid", "need f_start_hz < f_stop_hz and n_points >= 2");
    }

    if (root.has("noise")) {
        Node n(root.raw("noise"), "$.noise", strict, warnings);
        NoiseSpec ns;
        ns.snr_db = n.get<double>("snr_db", ns.snr_db);
        ns.seed = n.get<std::uint64_t>("seed", ns.seed);
        n.finish();
        sc.noise = ns;
    }

    if (root.has("interrogation")) {
        Node i(root.raw("interrogation"), "$.interrogation", strict, warnings);
        auto& s = sc.interrogation;
        s.zero_pad_factor = i.get<int>("zero_pad_factor", s.zero_pad_factor);
        s.peak_count = i.get<int>("peak_count", s.peak_count);
        s.min_separation_s = i.get<double>("min_separation_s", s.min_separation_s);
        s.gate_width_s = i.get<double>("gate_width_s", s.gate_width_s);
        s.gate_window = parse_gate_window(
            i.get<std::string>("gate_window", "cosine_tapered"), "$.interrogation.gate_window");
        s.taper_fraction = i.get<double>("taper_fraction", s.taper_fraction);
        s.search_halfwidth_hz = i.get<double>("search_halfwidth_hz", s.search_halfwidth_hz);
        i.finish();
        if (s.zero_pad_factor < 1)
            bad("$.interrogation.zero_pad_factor", "must be >= 1");
        if (s.peak_count < 1)
            bad("$.interrogation.peak_count", "must be >= 1");
    }

    if (root.has("tag")) {
        Node t(root.raw("tag"), "$.tag", strict, warnings);
        TagCode tag;
        tag.slot_count = t.get<int>("slot_count", tag.slot_count);
        tag.occupied_slots = t.get<std::vector<int>>("occupied_slots", std::vector<int>{});
        tag.slot_pitch_s = t.get<double>("slot_pitch_s", tag.slot_pitch_s);
        tag.t0_s = t.get<double>("t0_s", tag.t0_s);
        tag.guard_s = t.get<double>("guard_s", tag.guard_s);
        sc.tag_amplitude_db = t.get<double>("amplitude_db", sc.tag_amplitude_db);
        t.finish();
        sc.tag = tag;
    }

    root.finish();
    return sc;
}

std::string dump_scenario(const Scenario& sc)
{
    json doc;
    json echoes = json::array();
    for (auto& e : sc.geometry.echoes) {
        json segs = json::array();
        for (auto& s : e.segments)
            segs.push_back({{"length_wavelengths", s.length_wavelengths},
                            {"path", s.kind == PathKind::bare ? "bare" : "coated"}});
        echoes.push_back({{"id", e.id},
                          {"amplitude_db", e.amplitude_db},
                          {"polarity", e.polarity},
                          {"segments", segs}});
    }
    doc["geometry"] = {{"wavelength_m", sc.geometry.wavelength},
                       {"idt_pairs", sc.geometry.idt_pairs},
                       {"metallization_ratio", sc.geometry.metallization_ratio},
                       {"path1_wavelengths", sc.geometry.path1_wavelengths},
                       {"path2_wavelengths", sc.geometry.path2_wavelengths},
                       {"reflector_count", sc.geometry.reflector_count},
                       {"echoes", echoes}};

    auto mat = [](const Material& m) {
        json j = {{"name", m.name}, {"density_kg_m3", m.density}};
        if (m.shear_stiffness)
            j["shear_stiffness_pa"] = *m.shear_stiffness;
        return j;
    };
    json layers = json::array();
    for (auto& l : sc.stack.layers)
        layers.push_back({{"material", mat(l.material)}, {"thickness_m", l.thickness}});
    doc["stack"] = {{"substrate", mat(sc.stack.substrate)}, {"layers", layers}};

    doc["physics"] = {{"v1_nominal_mps", sc.physics.v1_nominal},
                      {"v2_nominal_mps", sc.physics.v2_nominal},
                      {"tcf1_ppm_per_c", sc.physics.tcf1_ppm_per_c},
                      {"tcf2_ppm_per_c", sc.physics.tcf2_ppm_per_c},
                      {"magnetoelastic",
                       {{"slope_ppm_per_mt", sc.physics.magnetoelastic.slope_ppm_per_mt},
                        {"h_low_mt", sc.physics.magnetoelastic.h_low_mt},
                        {"h_high_mt", sc.physics.magnetoelastic.h_high_mt},
                        {"smoothing_mt", sc.physics.magnetoelastic.smoothing_mt},
                        {"h_ref_mt", sc.physics.magnetoelastic.h_ref_mt}}}};

    doc["environment"] = {{"temperature_c", sc.environment.temperature_c},
                          {"field_mt", sc.environment.field_mt},
                          {"reference_temperature_c", sc.environment.reference_temperature_c}};
    doc["grid"] = {{"f_start_hz", sc.grid.f_start},
                   {"f_stop_hz", sc.grid.f_stop},
                   {"n_points", sc.grid.n_points}};
    if (sc.noise)
        doc["noise"] = {{"snr_db", sc.noise->snr_db}, {"seed", sc.noise->seed}};
    doc["interrogation"] = {
        {"zero_pad_factor", sc.interrogation.zero_pad_factor},
        {"peak_count", sc.interrogation.peak_count},
        {"min_separation_s", sc.interrogation.min_separation_s},
        {"gate_width_s", sc.interrogation.gate_width_s},
        {"gate_window",
         sc.interrogation.gate_window == GateWindow::rectangular ? "rectangular" : "cosine_tapered"},
        {"taper_fraction", sc.interrogation.taper_fraction},
        {"search_halfwidth_hz", sc.interrogation.search_halfwidth_hz}};
    if (sc.tag)
        doc["tag"] = {{"slot_count", sc.tag->slot_count},
                      {"occupied_slots", sc.tag->occupied_slots},
                      {"slot_pitch_s", sc.tag->slot_pitch_s},
                      {"t0_s", sc.tag->t0_s},
                      {"guard_s", sc.tag->guard_s},
                      {"amplitude_db", sc.tag_amplitude_db}};
    return doc.dump(2) + "\n";
}

DeviceGeometry effective_geometry(const Scenario& sc)
{
    if (!sc.tag)
        return sc.geometry;
    double record_span = (double)(sc.grid.n_points - 1) / (sc.grid.f_stop - sc.grid.f_start);
    return encode(*sc.tag, sc.geometry, sc.physics, sc.tag_amplitude_db, record_span);
}

} // namespace msaw
