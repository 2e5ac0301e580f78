#include "pacert/ribbon.hpp"

#include "pacert/errors.hpp"

#include <string>

namespace pacert {

namespace {

// Vertices carry slots E, N, W, S in ccw order; a-curves run W -> E,
// b-curves run S -> N.
struct GridBuilder {
    std::string text;
    void vertex(const std::string& v) { text += "vertex " + v + ": " + v + ".E " + v + ".N " + v + ".W " + v + ".S\n"; }
    void a_edge(const std::string& label, const std::string& curve, const std::string& from, const std::string& to) {
        text += "edge " + label + " " + curve + ": " + from + ".E " + to + ".W\n";
    }
    void b_edge(const std::string& label, const std::string& curve, const std::string& from, const std::string& to) {
        text += "edge " + label + " " + curve + ": " + from + ".N " + to + ".S\n";
    }
};

} // namespace

RibbonGraph build_figure1() {
    GridBuilder b;
    for (int i = 1; i <= 5; ++i) b.vertex("v" + std::to_string(i));
    b.a_edge("alpha2", "a", "v1", "v2");
    b.a_edge("alpha3", "a", "v2", "v3");
    b.a_edge("alpha4", "a", "v3", "v4");
    b.a_edge("alpha5", "a", "v4", "v5");
    b.a_edge("alpha1", "a", "v5", "v1");
    b.b_edge("beta2", "b", "v1", "v2");
    b.b_edge("beta4", "b", "v2", "v4");
    b.b_edge("beta1", "b", "v3", "v1");
    b.b_edge("beta5", "b", "v4", "v5");
    b.b_edge("beta3", "b", "v5", "v3");
    b.text += "mark v3\nmark-arc beta1 +\n";
    return parse_ribbon(b.text);
}

RibbonGraph build_genus4_model(int k) {
    if (k < 1) throw StructuralError("b2 must meet a2 at least once");
    GridBuilder b;
    for (int i = 1; i <= 5; ++i) b.vertex("v" + std::to_string(i));
    b.vertex("y");
    for (int i = 0; i < k; ++i) b.vertex("z" + std::to_string(i));
    b.a_edge("alpha2", "a1", "v1", "v2");
    b.a_edge("alpha3", "a1", "v2", "v3");
    b.a_edge("alpha4", "a1", "v3", "v4");
    b.a_edge("alpha5", "a1", "v4", "v5");
    b.a_edge("alpha1", "a1", "v5", "v1");
    b.b_edge("beta2", "b1", "v1", "v2");
    b.b_edge("beta4", "b1", "v2", "v4");
    b.b_edge("beta1", "b1", "v3", "y");
    b.b_edge("beta1y", "b1", "y", "v1");
    b.b_edge("beta5", "b1", "v4", "v5");
    b.b_edge("beta3", "b1", "v5", "v3");
    b.a_edge("eta0", "a2", "y", "z0");
    for (int i = 0; i + 1 < k; ++i) b.a_edge("eta" + std::to_string(i + 1), "a2", "z" + std::to_string(i), "z" + std::to_string(i + 1));
    b.a_edge("eta" + std::to_string(k), "a2", "z" + std::to_string(k - 1), "y");
    for (int i = 0; i < k; ++i)
        b.b_edge("theta" + std::to_string(i), "b2", "z" + std::to_string(i), "z" + std::to_string((i + 1) % k));
    b.text += "mark v3\n";
    return parse_ribbon(b.text);
}

RibbonGraph build_torus_square() {
    GridBuilder b;
    b.vertex("p");
    b.a_edge("alpha", "a", "p", "p");
    b.b_edge("beta", "b", "p", "p");
    return parse_ribbon(b.text);
}

} // namespace pacert
