#include "g2coh/spectral.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace g2coh {

std::string to_string(FacePart part) {
    switch (part) {
        case FacePart::TorusUnit: return "torus-unit";
        case FacePart::Invariant: return "invariant";
        case FacePart::Inner: return "inner";
        case FacePart::EisBoundary: return "eis-boundary";
    }
    return "?";
}

Summand FaceClass::summand() const {
    if (part == FacePart::Inner) return Summand::make_cusp(cusp_weight, parabolic, rep_label);
    return Summand::make_unit(parabolic, rep_label);
}

E1Page assemble_E1(HighestWeight lambda) {
    E1Page page;
    const auto& group = WeylGroup::instance();

    for (Parabolic p : {Parabolic::P1, Parabolic::P2}) {
        for (int label : kostant_representatives(p)) {
            const auto& v = group.element(label);
            const auto face = gl2_face_cohomology(levi_coordinates(v, lambda, p));
            if (face.h0) {
                FaceClass c{p, label, 0, FacePart::Invariant, 0, v.length};
                page.col0[static_cast<std::size_t>(c.total_degree)].push_back(c);
            }
            if (face.h1_inner_weight) {
                FaceClass c{p, label, 1, FacePart::Inner, *face.h1_inner_weight, v.length + 1};
                page.col0[static_cast<std::size_t>(c.total_degree)].push_back(c);
            }
            if (face.h1_eis) {
                FaceClass c{p, label, 1, FacePart::EisBoundary, 0, v.length + 1};
                page.col0[static_cast<std::size_t>(c.total_degree)].push_back(c);
            }
        }
    }

    for (const auto& w : group.elements()) {
        if (!torus_class_survives(w, lambda)) continue;
        FaceClass c{Parabolic::P0, w.label, 0, FacePart::TorusUnit, 0, w.length};
        page.col1[static_cast<std::size_t>(c.total_degree)].push_back(c);
    }

    return page;
}

std::vector<D1Edge> d1_edges(HighestWeight lambda) {
    std::vector<D1Edge> edges;
    const auto& group = WeylGroup::instance();
    const E1Page page = assemble_E1(lambda);

    for (const auto& column : page.col0) {
        for (const FaceClass& source : column) {
            if (source.part == FacePart::Inner) continue;
            const auto& v = group.element(source.rep_label);
            const WeylElement* target = &v;
            if (source.part == FacePart::EisBoundary) {
                const auto& u = group.generator(levi_reflection(source.parabolic));
                target = &group.product(u, v);
            }
            if (target->length != source.total_degree)
                throw std::logic_error("d1_edges: source and target degrees disagree");
            if (!torus_class_survives(*target, lambda)) continue;
            edges.push_back({source, target->label});
        }
    }
    return edges;
}

E2Page compute_E2(HighestWeight lambda) {
    E2Page result;
    const E1Page page = assemble_E1(lambda);
    const std::vector<D1Edge> edges = d1_edges(lambda);

    for (int q = 0; q < GradedSpace::kDegrees; ++q) {
        // Sources ordered by (parabolic, label); the first edge into each
        // target realizes the rank, later ones land in the kernel.
        std::map<int, int> indegree;
        auto edge_of = [&](const FaceClass& c) -> const D1Edge* {
            for (const D1Edge& e : edges)
                if (e.source.parabolic == c.parabolic && e.source.rep_label == c.rep_label &&
                    e.source.part == c.part)
                    return &e;
            return nullptr;
        };

        auto sources = page.col0[static_cast<std::size_t>(q)];
        std::sort(sources.begin(), sources.end(), [](const FaceClass& l, const FaceClass& r) {
            return std::make_tuple(l.parabolic, l.rep_label, l.part) <
                   std::make_tuple(r.parabolic, r.rep_label, r.part);
        });

        for (const FaceClass& c : sources) {
            if (c.part == FacePart::Inner) {
                result.kernel[static_cast<std::size_t>(q)].push_back(c.summand());
                continue;
            }
            const D1Edge* e = edge_of(c);
            if (e == nullptr) {
                // Target torus class is dead: the restriction map is zero.
                result.kernel[static_cast<std::size_t>(q)].push_back(c.summand());
                continue;
            }
            if (++indegree[e->target_label] > 1)
                result.kernel[static_cast<std::size_t>(q)].push_back(c.summand());
        }

        for (const FaceClass& t : page.col1[static_cast<std::size_t>(q)])
            if (indegree.find(t.rep_label) == indegree.end())
                result.cokernel[static_cast<std::size_t>(q)].push_back(t.summand());
    }
    return result;
}

GradedSpace boundary_cohomology(HighestWeight lambda) {
    const E2Page e2 = compute_E2(lambda);
    GradedSpace h;
    for (int q = 0; q < GradedSpace::kDegrees; ++q) {
        for (const Summand& s : e2.kernel[static_cast<std::size_t>(q)]) h.add(q, s);
        if (q >= 1)
            for (const Summand& s : e2.cokernel[static_cast<std::size_t>(q - 1)]) h.add(q, s);
    }
    h.sort();
    return h;
}

int classify_case(HighestWeight lambda) {
    if (lambda.m1 < 0 || lambda.m2 < 0)
        throw std::invalid_argument("classify_case: highest weight must be dominant");
    const bool odd1 = lambda.m1 % 2 != 0;
    const bool odd2 = lambda.m2 % 2 != 0;
    if (lambda.m1 == 0) {
        if (lambda.m2 == 0) return 1;
        return odd2 ? 3 : 2;
    }
    if (!odd1) {
        if (lambda.m2 == 0) return 4;
        return odd2 ? 6 : 5;
    }
    if (lambda.m2 == 0) return 7;
    return odd2 ? 9 : 8;
}

GradedSpace boundary_reference_table(HighestWeight lambda) {
    const std::int64_t m1 = lambda.m1;
    const std::int64_t m2 = lambda.m2;
    GradedSpace g;
    auto unit = [] { return Summand::make_unit(); };
    auto cusp = [](std::int64_t k) { return Summand::make_cusp(k); };
    auto pair = [&g](int qa, int qb, Summand s) {
        g.add(qa, s);
        g.add(qb, s);
    };

    switch (classify_case(lambda)) {
        case 1:
            g.add(0, unit());
            g.add(7, unit());
            break;
        case 2:
            pair(1, 6, cusp(m2 + 2));
            pair(3, 4, cusp(3 * m2 + 6));
            pair(3, 4, cusp(2 * m2 + 4));
            break;
        case 3:
            pair(2, 5, cusp(3 * m2 + 5));
            pair(2, 5, cusp(m2 + 3));
            pair(2, 5, unit());
            pair(3, 4, cusp(2 * m2 + 4));
            break;
        case 4:
            pair(1, 6, cusp(m1 + 2));
            pair(3, 4, cusp(2 * m1 + 6));
            pair(3, 4, cusp(m1 + 4));
            break;
        case 5:
            pair(1, 6, cusp(m1 + 2));
            pair(1, 6, cusp(m2 + 2));
            pair(1, 6, unit());
            pair(3, 4, cusp(2 * m1 + 3 * m2 + 6));
            pair(3, 4, cusp(m1 + 2 * m2 + 4));
            break;
        case 6:
            pair(1, 6, cusp(m1 + 2));
            pair(2, 5, cusp(m1 + 3 * m2 + 5));
            pair(2, 5, cusp(m1 + m2 + 3));
            pair(3, 4, cusp(m1 + 2 * m2 + 4));
            break;
        case 7:
            pair(2, 5, cusp(m1 + 5));
            pair(2, 5, cusp(m1 + 3));
            pair(2, 5, unit());
            pair(3, 4, cusp(2 * m1 + 6));
            break;
        case 8:
            pair(1, 6, cusp(m2 + 2));
            pair(2, 5, cusp(m1 + 3 * m2 + 5));
            pair(2, 5, cusp(m1 + m2 + 3));
            pair(3, 4, cusp(2 * m1 + 3 * m2 + 6));
            break;
        case 9:
            break;
    }
    g.sort();
    return g;
}

}  // namespace g2coh
