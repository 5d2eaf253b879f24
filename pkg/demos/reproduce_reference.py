"""Regenerate both agreement reports against the bundled golden vectors.

The recorded deployment results depend on parameters the source never
stated, so these reports count matches instead of asserting them; see the
README section on reproduction scope.
"""

from wsngen.report import (
    packet_diff_report,
    reference_agreement_report,
    render_agreement_text,
    render_packet_diff_text,
)

agreement = reference_agreement_report()
print(render_agreement_text(agreement))

diff = packet_diff_report()
print(render_packet_diff_text(diff))
