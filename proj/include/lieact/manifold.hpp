#pragma once

#include <optional>
#include <string>

#include "lieact/errors.hpp"
#include "lieact/tristate.hpp"

namespace lieact {

// Manifold model for the rule engine.  A descriptor is a bag of classical
// topological invariants; manifold_validate cross-checks them against the
// standard surface facts and fills in whatever the given data determines.
// Everything here is textbook surface classification, recorded once so the
// engine can trust its inputs.

enum class SurfaceKind {
    plane,
    sphere,
    cylinder,
    torus,
    projective_plane,
    moebius,
    klein_bottle,
    closed_orientable_genus,
    closed_nonorientable_genus,
    other,
};

inline const char* surface_kind_str(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::plane: return "plane";
        case SurfaceKind::sphere: return "sphere";
        case SurfaceKind::cylinder: return "cylinder";
        case SurfaceKind::torus: return "torus";
        case SurfaceKind::projective_plane: return "projective_plane";
        case SurfaceKind::moebius: return "moebius";
        case SurfaceKind::klein_bottle: return "klein_bottle";
        case SurfaceKind::closed_orientable_genus: return "closed_orientable_genus";
        case SurfaceKind::closed_nonorientable_genus: return "closed_nonorientable_genus";
        default: return "other";
    }
}

inline std::optional<SurfaceKind> surface_kind_from(const std::string& name) {
    static const std::pair<const char*, SurfaceKind> table[] = {
        {"plane", SurfaceKind::plane},
        {"sphere", SurfaceKind::sphere},
        {"cylinder", SurfaceKind::cylinder},
        {"torus", SurfaceKind::torus},
        {"projective_plane", SurfaceKind::projective_plane},
        {"moebius", SurfaceKind::moebius},
        {"klein_bottle", SurfaceKind::klein_bottle},
        {"closed_orientable_genus", SurfaceKind::closed_orientable_genus},
        {"closed_nonorientable_genus", SurfaceKind::closed_nonorientable_genus},
        {"other", SurfaceKind::other},
    };
    for (const auto& [text, kind] : table)
        if (name == text) return kind;
    return std::nullopt;
}

// The seven boundaryless surfaces admitting a transitive Lie group action.
inline bool is_mostow_kind(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::plane:
        case SurfaceKind::sphere:
        case SurfaceKind::cylinder:
        case SurfaceKind::torus:
        case SurfaceKind::projective_plane:
        case SurfaceKind::moebius:
        case SurfaceKind::klein_bottle:
            return true;
        default:
            return false;
    }
}

struct ManifoldDescriptor {
    int dim = 2;
    bool compact = false;
    bool has_boundary = false;
    TriState orientable = TriState::unknown;
    std::optional<long long> euler;
    std::optional<int> genus;
    TriState pi1_finite = TriState::unknown;
    TriState parallelizable = TriState::unknown;
    std::optional<SurfaceKind> surface_kind;
};

namespace detail {

[[noreturn]] inline void descriptor_fail(const char* a, const char* b, const std::string& why) {
    throw DescriptorError("inconsistent manifold descriptor (" + std::string(a) + "/" + b +
                          "): " + why);
}

inline void merge_tri(TriState& slot, TriState fact, const char* field, const char* source) {
    if (fact == TriState::unknown) return;
    if (slot == TriState::unknown) {
        slot = fact;
        return;
    }
    if (slot != fact)
        descriptor_fail(field, source,
                        std::string("stated ") + tri_str(slot) + ", implied " + tri_str(fact));
}

inline void merge_euler(std::optional<long long>& slot, long long fact, const char* source) {
    if (!slot) {
        slot = fact;
        return;
    }
    if (*slot != fact)
        descriptor_fail("euler", source,
                        "stated " + std::to_string(*slot) + ", implied " + std::to_string(fact));
}

inline void merge_genus(std::optional<int>& slot, int fact, const char* source) {
    if (!slot) {
        slot = fact;
        return;
    }
    if (*slot != fact)
        descriptor_fail("genus", source,
                        "stated " + std::to_string(*slot) + ", implied " + std::to_string(fact));
}

inline void require_compactness(const ManifoldDescriptor& m, bool compact_fact,
                                const char* source) {
    if (m.compact != compact_fact)
        descriptor_fail("compact", source,
                        compact_fact ? "this surface is compact" : "this surface is noncompact");
    if (m.has_boundary)
        descriptor_fail("has_boundary", source, "the model surfaces here are boundaryless");
}

}  // namespace detail

// Cross-checks a descriptor and returns it with every determined field
// filled in.  Genus descriptors are normalized to the named kinds (genus 0
// orientable is the sphere, and so on) so downstream matching only ever
// sees one spelling of each surface.
inline ManifoldDescriptor manifold_validate(ManifoldDescriptor m) {
    using detail::descriptor_fail;
    using detail::merge_euler;
    using detail::merge_genus;
    using detail::merge_tri;

    if (m.dim < 1) descriptor_fail("dim", "dim", "dimension must be at least 1");
    if (m.genus && *m.genus < 0) descriptor_fail("genus", "genus", "genus cannot be negative");
    if (m.genus && m.dim != 2) descriptor_fail("genus", "dim", "genus is a surface invariant");
    if (m.surface_kind && m.dim != 2)
        descriptor_fail("surface_kind", "dim", "surface kinds require dim = 2");

    // A stated genus means a closed surface throughout (the open genus-g
    // surfaces are not modeled); orientability decides which χ formula.
    if (m.genus && !m.surface_kind) {
        if (!m.compact || m.has_boundary)
            descriptor_fail("genus", "compact", "genus descriptors denote closed surfaces");
        if (m.orientable == TriState::unknown)
            descriptor_fail("genus", "orientable", "genus needs orientability to fix χ");
        m.surface_kind = m.orientable == TriState::yes ? SurfaceKind::closed_orientable_genus
                                                       : SurfaceKind::closed_nonorientable_genus;
    }

    // Closed surfaces handed in with χ but no kind: the classification of
    // surfaces determines the rest whenever it can.
    if (!m.surface_kind && !m.genus && m.dim == 2 && m.compact && !m.has_boundary && m.euler) {
        long long chi = *m.euler;
        if (m.orientable == TriState::yes) {
            if (chi > 2 || chi % 2 != 0)
                descriptor_fail("euler", "orientable", "closed orientable surfaces have even χ ≤ 2");
            m.genus = static_cast<int>((2 - chi) / 2);
            m.surface_kind = SurfaceKind::closed_orientable_genus;
        } else if (m.orientable == TriState::no) {
            if (chi > 1)
                descriptor_fail("euler", "orientable", "closed nonorientable surfaces have χ ≤ 1");
            m.genus = static_cast<int>(2 - chi);
            m.surface_kind = SurfaceKind::closed_nonorientable_genus;
        } else if (chi == 2) {
            m.orientable = TriState::yes;
            m.genus = 0;
            m.surface_kind = SurfaceKind::closed_orientable_genus;
        } else if (chi == 1 || (chi < 0 && chi % 2 != 0)) {
            // Odd χ forces nonorientability (closed orientable χ is even).
            m.orientable = TriState::no;
            m.genus = static_cast<int>(2 - chi);
            m.surface_kind = SurfaceKind::closed_nonorientable_genus;
        }
        // χ even ≤ 0 with unknown orientability stays ambiguous
        // (torus vs Klein bottle, and so on); nothing to normalize.
    }

    // Normalize the parametric kinds to named surfaces at low genus.
    if (m.surface_kind == SurfaceKind::closed_orientable_genus) {
        if (!m.genus) descriptor_fail("surface_kind", "genus", "genus parameter missing");
        detail::require_compactness(m, true, "surface_kind");
        merge_tri(m.orientable, TriState::yes, "orientable", "surface_kind");
        merge_euler(m.euler, 2 - 2 * static_cast<long long>(*m.genus), "genus");
        merge_tri(m.pi1_finite, *m.genus == 0 ? TriState::yes : TriState::no, "pi1_finite",
                  "surface_kind");
        merge_tri(m.parallelizable, *m.genus == 1 ? TriState::yes : TriState::no,
                  "parallelizable", "surface_kind");
        if (*m.genus == 0) m.surface_kind = SurfaceKind::sphere;
        if (*m.genus == 1) m.surface_kind = SurfaceKind::torus;
    } else if (m.surface_kind == SurfaceKind::closed_nonorientable_genus) {
        if (!m.genus) descriptor_fail("surface_kind", "genus", "genus parameter missing");
        if (*m.genus < 1)
            descriptor_fail("surface_kind", "genus", "nonorientable genus starts at 1");
        detail::require_compactness(m, true, "surface_kind");
        merge_tri(m.orientable, TriState::no, "orientable", "surface_kind");
        merge_euler(m.euler, 2 - static_cast<long long>(*m.genus), "genus");
        merge_tri(m.pi1_finite, *m.genus == 1 ? TriState::yes : TriState::no, "pi1_finite",
                  "surface_kind");
        merge_tri(m.parallelizable, TriState::no, "parallelizable", "surface_kind");
        if (*m.genus == 1) m.surface_kind = SurfaceKind::projective_plane;
        if (*m.genus == 2) m.surface_kind = SurfaceKind::klein_bottle;
    }

    // Fact table for the named model surfaces.
    if (m.surface_kind && *m.surface_kind != SurfaceKind::other &&
        *m.surface_kind != SurfaceKind::closed_orientable_genus &&
        *m.surface_kind != SurfaceKind::closed_nonorientable_genus) {
        struct Facts {
            bool compact;
            TriState orientable;
            long long euler;
            TriState pi1_finite;
            TriState parallelizable;
            int genus;  // -1 when genus talk does not apply
        };
        Facts f{};
        switch (*m.surface_kind) {
            case SurfaceKind::plane:
                f = {false, TriState::yes, 1, TriState::yes, TriState::yes, -1};
                break;
            case SurfaceKind::sphere:
                f = {true, TriState::yes, 2, TriState::yes, TriState::no, 0};
                break;
            case SurfaceKind::cylinder:
                f = {false, TriState::yes, 0, TriState::no, TriState::yes, -1};
                break;
            case SurfaceKind::torus:
                f = {true, TriState::yes, 0, TriState::no, TriState::yes, 1};
                break;
            case SurfaceKind::projective_plane:
                f = {true, TriState::no, 1, TriState::yes, TriState::no, 1};
                break;
            case SurfaceKind::moebius:
                f = {false, TriState::no, 0, TriState::no, TriState::no, -1};
                break;
            default:  // klein_bottle
                f = {true, TriState::no, 0, TriState::no, TriState::no, 2};
                break;
        }
        detail::require_compactness(m, f.compact, "surface_kind");
        merge_tri(m.orientable, f.orientable, "orientable", "surface_kind");
        merge_euler(m.euler, f.euler, "surface_kind");
        merge_tri(m.pi1_finite, f.pi1_finite, "pi1_finite", "surface_kind");
        merge_tri(m.parallelizable, f.parallelizable, "parallelizable", "surface_kind");
        if (f.genus >= 0)
            merge_genus(m.genus, f.genus, "surface_kind");
        else if (m.genus)
            descriptor_fail("genus", "surface_kind", "genus does not apply to this surface");
    }

    // Closed odd-dimensional manifolds have χ = 0 (Poincaré duality); a
    // compact descriptor with boundary may carry any χ.
    if (m.dim % 2 == 1 && m.compact && !m.has_boundary) {
        if (m.euler && *m.euler != 0)
            descriptor_fail("euler", "dim", "closed odd-dimensional manifolds have χ = 0");
        m.euler = 0;
    }

    // Parallelizable forces orientable, and kills χ for closed manifolds.
    if (m.parallelizable == TriState::yes) {
        merge_tri(m.orientable, TriState::yes, "orientable", "parallelizable");
        if (m.compact && !m.has_boundary) {
            if (m.euler && *m.euler != 0)
                descriptor_fail("euler", "parallelizable",
                                "closed parallelizable manifolds have χ = 0");
            m.euler = 0;
        }
    }

    return m;
}

}  // namespace lieact
