#ifndef QFACE_ORACLE_HPP
#define QFACE_ORACLE_HPP

#include "qface/faces.hpp"
#include "qface/geometry.hpp"
#include "qface/lp.hpp"
#include "qface/quiver.hpp"

#include <optional>
#include <string>

namespace qface {

/// Exact supporting-hyperplane certificate: <normal, e> = offset on every
/// vertex of the face, <normal, e> <= offset - 1 off it.
struct SupportCertificate {
    RationalVector normal;
    Rational offset;
};

struct FaceProbe {
    bool face = false;
    std::optional<SupportCertificate> certificate;
};

/// Decides by exact LP feasibility whether `s` is exactly the vertex set of
/// a face of DE(q); never consults rank functions, components or
/// contractions. A returned certificate is re-validated by direct
/// evaluation before being handed out.
FaceProbe is_face_oracle(const Quiver& q, const EdgeMask& s);
FaceProbe is_face_oracle(const EdgeSubset& s);

/// Direct evaluation of the certificate constraints with the given slack.
bool validate_certificate(const Quiver& q, const EdgeMask& s, const SupportCertificate& cert,
                          const Rational& slack = Rational(1));

/// Probes all 2^|Q1| edge subsets; throws TooLarge above the oracle guard.
FaceLattice brute_force_lattice(const Quiver& q);

struct VerifyReport {
    bool match = false;
    std::string detail;    // first discrepancy, or a summary on success
    int face_count = 0;    // lattice size including the improper faces
    int dim = -1;
};

/// Cross-checks face_lattice against brute_force_lattice mask for mask, and
/// dim_de against the affine hull of the vertex vectors.
VerifyReport verify(const Quiver& q);

/// Same comparison against a caller-supplied lattice; lets tests feed a
/// deliberately mutated lattice through the mismatch path.
VerifyReport verify_against(const Quiver& q, const FaceLattice& claimed);

} // namespace qface

#endif
