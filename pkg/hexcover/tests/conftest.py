from ..config import enabled_test_groups

collect_ignore_glob = []
slow_groups = ['catalog', 'corpus']

for group in slow_groups:
    # full catalog derivation and corpus enumeration take minutes
    if group not in enabled_test_groups:
        collect_ignore_glob.append(f"unit/*/test_{group}_*.py")
