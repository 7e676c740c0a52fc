#include "encap/scene_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "encap/errors.hpp"

namespace encap {

namespace {

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Scene parse_scene(std::string_view text) {
    Scene scene;
    bool have_dim = false;
    std::set<std::string> names;
    std::vector<LinConstraint> current;
    std::size_t piece_line = 0;
    bool in_piece = false;

    auto close_piece = [&]() {
        if (!in_piece) return;
        if (current.empty()) fail(piece_line, "empty piece (no constraints)");
        try {
            scene.bodies.back().pieces.emplace_back(std::move(current), scene.d);
        } catch (const InputError& e) {
            fail(piece_line, std::string("invalid piece: ") + e.what());
        }
        current.clear();
        in_piece = false;
    };
    auto close_body = [&](std::size_t line) {
        close_piece();
        if (!scene.bodies.empty() && scene.bodies.back().pieces.empty())
            fail(line, "body " + scene.bodies.back().name + " has no pieces");
    };

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = tokens(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "dim") {
            if (have_dim) fail(lineno, "duplicate dim line");
            if (tok.size() != 2) fail(lineno, "expected `dim <d>`");
            try {
                const long d = std::stol(tok[1]);
                if (d < 1) fail(lineno, "dimension must be >= 1");
                scene.d = static_cast<std::size_t>(d);
            } catch (const std::logic_error&) {
                fail(lineno, "bad dimension `" + tok[1] + "`");
            }
            have_dim = true;
        } else if (kw == "body") {
            if (!have_dim) fail(lineno, "`body` before `dim`");
            if (tok.size() != 2) fail(lineno, "expected `body <name>`");
            close_body(lineno);
            if (!names.insert(tok[1]).second) fail(lineno, "duplicate body name " + tok[1]);
            scene.bodies.push_back({tok[1], {}});
        } else if (kw == "piece") {
            if (scene.bodies.empty()) fail(lineno, "`piece` outside a body");
            if (tok.size() != 1) fail(lineno, "`piece` takes no arguments");
            close_piece();
            in_piece = true;
            piece_line = lineno;
        } else if (kw == "lt" || kw == "le" || kw == "eq") {
            if (!in_piece) fail(lineno, "constraint outside a piece");
            if (tok.size() != scene.d + 2)
                fail(lineno, "arity mismatch: expected " + std::to_string(scene.d + 1) + " numbers, got " +
                                 std::to_string(tok.size() - 1));
            LinConstraint c;
            c.rel = kw == "lt" ? Relation::Lt : kw == "le" ? Relation::Le : Relation::Eq;
            try {
                for (std::size_t i = 0; i < scene.d; ++i) c.normal.push_back(Rational::parse(tok[1 + i]));
                c.offset = Rational::parse(tok.back());
            } catch (const std::exception& e) {
                fail(lineno, std::string("bad number: ") + e.what());
            }
            if (is_zero(c.normal)) fail(lineno, "zero normal");
            current.push_back(std::move(c));
        } else {
            fail(lineno, "unknown keyword `" + kw + "` (expected dim, body, piece, lt, le or eq)");
        }
    }
    if (!have_dim) fail(lineno, "missing `dim` line");
    close_body(lineno);
    scene.validate();
    return scene;
}

Scene read_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str());
}

std::string write_scene(const Scene& scene) {
    std::ostringstream out;
    out << "dim " << scene.d << '\n';
    for (const ConvexBody& b : scene.bodies) {
        out << "body " << b.name << '\n';
        for (const Piece& p : b.pieces) {
            out << "piece\n";
            for (const LinConstraint& c : p.constraints()) {
                out << relation_token(c.rel);
                for (const Rational& a : c.normal) out << ' ' << a;
                out << ' ' << c.offset << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace encap
