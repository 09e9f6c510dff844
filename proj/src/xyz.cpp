#include "hienet/xyz.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hienet/errors.hpp"
#include "hienet/units.hpp"

namespace hienet {

namespace {

// Line-oriented cursor over the input text, tracking 1-based line numbers
// for error reporting.
struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_number = 0;

    bool next(std::string_view& line) {
        if (pos >= text.size()) return false;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        ++line_number;
        return true;
    }
};

bool is_blank(std::string_view line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void fail(int frame, int line, const std::string& what) {
    throw ParseError("frame " + std::to_string(frame) + ", line " + std::to_string(line) + ": " +
                     what);
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

// key=value tokens from the comment line; values may be double-quoted.
std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view line) {
    std::vector<std::pair<std::string, std::string>> kv;
    std::size_t i = 0;
    const std::size_t n = line.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= n) break;
        std::size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=') ++i;
        if (i >= n || line[i] != '=') {
            // bare token without '='; skip it
            while (i < n && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            continue;
        }
        std::string key(line.substr(start, i - start));
        ++i; // '='
        std::string value;
        if (i < n && line[i] == '"') {
            ++i;
            std::size_t vstart = i;
            while (i < n && line[i] != '"') ++i;
            value = std::string(line.substr(vstart, i - vstart));
            if (i < n) ++i; // closing quote
        } else {
            std::size_t vstart = i;
            while (i < n && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            value = std::string(line.substr(vstart, i - vstart));
        }
        kv.emplace_back(std::move(key), std::move(value));
    }
    return kv;
}

} // namespace

std::vector<MolecularConfiguration> parse_extended_xyz(std::string_view text,
                                                       const SpeciesTable& species,
                                                       const XyzParseOptions& options) {
    std::vector<MolecularConfiguration> configs;
    LineReader reader{text};
    std::string_view line;
    int frame = 0;

    while (true) {
        // skip blank separator lines between frames
        bool got = false;
        while ((got = reader.next(line)) && is_blank(line)) {
        }
        if (!got) break;

        const int count_line = reader.line_number;
        int n_atoms = 0;
        {
            auto tokens = tokenize(line);
            double as_double = 0.0;
            if (tokens.size() != 1 || !parse_double(tokens[0], as_double) ||
                as_double != static_cast<double>(static_cast<int>(as_double)) || as_double < 1)
                fail(frame, count_line, "malformed atom count '" + std::string(line) + "'");
            n_atoms = static_cast<int>(as_double);
        }

        if (!reader.next(line)) fail(frame, count_line, "missing comment line");

        MolecularConfiguration config;
        config.id = std::to_string(frame);
        double coord_scale = units::angstrom_to_bohr;
        double energy_scale = units::hartree_to_kcal;
        std::optional<double> energy;
        for (const auto& [key, value] : parse_key_values(line)) {
            if (key == options.id_key) {
                config.id = value;
            } else if (key == options.energy_key) {
                double e = 0.0;
                if (!parse_double(value, e))
                    fail(frame, reader.line_number, "non-numeric energy '" + value + "'");
                energy = e;
            } else if (key == "coord_unit") {
                if (value == "bohr")
                    coord_scale = 1.0;
                else if (value == "angstrom")
                    coord_scale = units::angstrom_to_bohr;
                else
                    fail(frame, reader.line_number, "unknown coord_unit '" + value + "'");
            } else if (key == "energy_unit") {
                if (value == "kcal_per_mol")
                    energy_scale = 1.0;
                else if (value == "hartree")
                    energy_scale = units::hartree_to_kcal;
                else
                    fail(frame, reader.line_number, "unknown energy_unit '" + value + "'");
            }
        }
        if (energy) config.energy = *energy * energy_scale;

        config.atomic_numbers.reserve(n_atoms);
        config.coordinates.reserve(n_atoms);
        for (int a = 0; a < n_atoms; ++a) {
            if (!reader.next(line))
                fail(frame, reader.line_number,
                     "unexpected end of input; expected " + std::to_string(n_atoms) + " atoms");
            auto tokens = tokenize(line);
            if (tokens.size() < 4)
                fail(frame, reader.line_number, "expected 'symbol x y z', got '" +
                                                    std::string(line) + "'");
            const int z = atomic_number_of(tokens[0]);
            if (z == 0)
                fail(frame, reader.line_number, "unknown element symbol '" + tokens[0] + "'");
            if (!species.contains(z))
                fail(frame, reader.line_number,
                     "element '" + tokens[0] + "' is not in the species table");
            Vec3 r;
            for (int k = 0; k < 3; ++k) {
                if (!parse_double(tokens[1 + k], r[k]))
                    fail(frame, reader.line_number,
                         "non-numeric coordinate '" + tokens[1 + k] + "'");
                r[k] *= coord_scale;
            }
            config.atomic_numbers.push_back(z);
            config.coordinates.push_back(r);
        }
        configs.push_back(std::move(config));
        ++frame;
    }
    return configs;
}

std::vector<MolecularConfiguration> parse_extended_xyz_file(const std::string& path,
                                                            const SpeciesTable& species,
                                                            const XyzParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_extended_xyz(buffer.str(), species, options);
}

std::string to_extended_xyz(const std::vector<MolecularConfiguration>& configs) {
    std::string out;
    char buf[256];
    for (const auto& config : configs) {
        out += std::to_string(config.size());
        out += '\n';
        out += "id=" + config.id;
        if (config.energy) {
            std::snprintf(buf, sizeof buf, " energy=%.17g energy_unit=kcal_per_mol",
                          *config.energy);
            out += buf;
        }
        out += " coord_unit=angstrom\n";
        for (int i = 0; i < config.size(); ++i) {
            const char* symbol = element_symbol(config.atomic_numbers[i]);
            if (!symbol)
                throw DataError("no symbol for atomic number " +
                                std::to_string(config.atomic_numbers[i]));
            const Vec3& r = config.coordinates[i];
            std::snprintf(buf, sizeof buf, "%s %.10f %.10f %.10f\n", symbol,
                          r[0] * units::bohr_to_angstrom, r[1] * units::bohr_to_angstrom,
                          r[2] * units::bohr_to_angstrom);
            out += buf;
        }
    }
    return out;
}

} // namespace hienet
