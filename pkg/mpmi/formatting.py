"""
Text rendering of correlation profiles, audit reports and matrices.
"""
from math import isfinite, isnan

import numpy as np
import pandas as pd

def format_float(val, prec=10):
    if (val is None) or isnan(val):
        return '-'

    elif isfinite(val):
        aux = '{{:.{}g}}'.format(prec).format(val)
        return '0' if aux == '-0' else aux

    else:
        return str(val)

def profile_rows(profile):
    """
    (name, value) rows of a CorrelationProfile, in a fixed order.
    """
    rows = [('S(rho)', profile.total_entropy)]
    rows.extend(('S(rho_{})'.format(ii + 1), val)
                for ii, val in enumerate(profile.marginal_entropies))
    rows.append(('I(rho)', profile.retc))
    rows.extend(('I_{}'.format(profile.n - k), val)
                for k, val in sorted(profile.marginal_mi_sums.items()))
    rows.extend(('S_{}'.format(k), val)
                for k, val in sorted(profile.marginal_entropy_sums.items()))
    if profile.residual is not None:
        rows.append(('I_r', profile.residual))

    return rows

def format_profile(profile, prec=10):
    df = pd.DataFrame([(name, format_float(val, prec))
                       for name, val in profile_rows(profile)],
                      columns=['measure', 'bits'])
    return df.to_string(index=False)

def report_frame(report):
    """
    DataFrame with one row per check result of an AuditReport.
    """
    return pd.DataFrame(
        [(result.check_id, result.label, result.kind, result.margin,
          result.tolerance, result.aux,
          'ERROR' if result.errored else
          ('ok' if result.satisfied else 'FAILED'))
         for result in report.results],
        columns=['check', 'label', 'kind', 'margin', 'tolerance', 'aux',
                 'status'],
    )

def format_report(report, prec=10):
    lines = ['state: {} (shape {})'.format(report.state_descriptor,
                                            report.shape)]
    df = report_frame(report)
    for col in ('margin', 'tolerance', 'aux'):
        df[col] = [format_float(val, prec) for val in df[col]]

    lines.append(df.to_string(index=False))
    lines.extend('note: ' + note for note in report.notes)
    if len(report.saturating):
        labels = ['{}{}'.format(result.check_id,
                                '[{}]'.format(result.label)
                                if result.label else '')
                  for result in report.saturating]
        lines.append('saturating: ' + ', '.join(labels))

    lines.append('all checks satisfied: {}'
                 .format('yes' if report.all_satisfied() else 'no'))
    return '\n'.join(lines)

def format_matrix(matrix, prec=6):
    return np.array2string(np.asarray(matrix), precision=prec,
                           suppress_small=True, max_line_width=120)
