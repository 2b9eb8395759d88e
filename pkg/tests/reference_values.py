"""Reference values used by the acceptance suite."""

# (target, library) -> [(estimate, lo, hi) at m = n, 2n, 3n]
INTERVAL_TABLE = {('0', 'aerobic'): [(0.289, 0.267, 0.312), (0.253, 0.234, 0.273), (0.231, 0.213, 0.249)],
 ('0', 'anaerobic'): [(0.409, 0.387, 0.431), (0.358, 0.339, 0.378), (0.326, 0.309, 0.344)],
 ('0-3', 'aerobic'): [(0.49, 0.452, 0.528), (0.432, 0.399, 0.465), (0.394, 0.364, 0.425)],
 ('0-3', 'anaerobic'): [(0.679, 0.642, 0.716), (0.606, 0.573, 0.64), (0.556, 0.526, 0.587)],
 ('0-4', 'aerobic'): [(0.526, 0.485, 0.563), (0.465, 0.43, 0.501), (0.425, 0.393, 0.459)],
 ('0-4', 'anaerobic'): [(0.724, 0.685, 0.763), (0.65, 0.615, 0.686), (0.599, 0.566, 0.631)],
 ('0-5', 'aerobic'): [(0.556, 0.514, 0.599), (0.494, 0.456, 0.532), (0.452, 0.418, 0.487)],
 ('0-5', 'anaerobic'): [(0.76, 0.718, 0.801), (0.686, 0.649, 0.723), (0.634, 0.599, 0.668)],
 ('1', 'aerobic'): [(0.093, 0.084, 0.101), (0.083, 0.076, 0.089), (0.075, 0.07, 0.081)],
 ('1', 'anaerobic'): [(0.13, 0.123, 0.137), (0.117, 0.111, 0.124), (0.108, 0.102, 0.114)],
 ('2', 'aerobic'): [(0.061, 0.057, 0.066), (0.054, 0.05, 0.059), (0.05, 0.046, 0.054)],
 ('2', 'anaerobic'): [(0.08, 0.076, 0.085), (0.075, 0.071, 0.079), (0.07, 0.066, 0.074)],
 ('3', 'aerobic'): [(0.046, 0.042, 0.049), (0.041, 0.038, 0.045), (0.038, 0.035, 0.041)],
 ('3', 'anaerobic'): [(0.059, 0.056, 0.062), (0.055, 0.052, 0.058), (0.052, 0.05, 0.055)],
 ('4', 'aerobic'): [(0.036, 0.033, 0.039), (0.034, 0.031, 0.036), (0.031, 0.029, 0.034)],
 ('4', 'anaerobic'): [(0.045, 0.042, 0.047), (0.044, 0.042, 0.046), (0.042, 0.04, 0.044)]}

# (library, m token, theta, sigma) -> (lo, hi), 95% interval for the (m; 0)-discovery
SENSITIVITY = {('aerobic', '100n', 0.1, 0.2): (0.002, 0.003),
 ('aerobic', '100n', 0.1, 0.4): (0.011, 0.014),
 ('aerobic', '100n', 0.1, 0.6): (0.043, 0.051),
 ('aerobic', '100n', 0.1, 0.8): (0.144, 0.168),
 ('aerobic', '100n', 1.0, 0.2): (0.002, 0.003),
 ('aerobic', '100n', 1.0, 0.4): (0.012, 0.014),
 ('aerobic', '100n', 1.0, 0.6): (0.044, 0.05),
 ('aerobic', '100n', 1.0, 0.8): (0.145, 0.169),
 ('aerobic', '100n', 10.0, 0.2): (0.002, 0.003),
 ('aerobic', '100n', 10.0, 0.4): (0.012, 0.014),
 ('aerobic', '100n', 10.0, 0.6): (0.044, 0.052),
 ('aerobic', '100n', 10.0, 0.8): (0.148, 0.172),
 ('aerobic', '100n', 100.0, 0.2): (0.004, 0.005),
 ('aerobic', '100n', 100.0, 0.4): (0.017, 0.02),
 ('aerobic', '100n', 100.0, 0.6): (0.055, 0.064),
 ('aerobic', '100n', 100.0, 0.8): (0.171, 0.194),
 ('aerobic', '100n', 1000.0, 0.2): (0.024, 0.025),
 ('aerobic', '100n', 1000.0, 0.4): (0.056, 0.06),
 ('aerobic', '100n', 1000.0, 0.6): (0.132, 0.142),
 ('aerobic', '100n', 1000.0, 0.8): (0.311, 0.331),
 ('aerobic', '10n', 0.1, 0.2): (0.013, 0.016),
 ('aerobic', '10n', 0.1, 0.4): (0.043, 0.051),
 ('aerobic', '10n', 0.1, 0.6): (0.104, 0.123),
 ('aerobic', '10n', 0.1, 0.8): (0.225, 0.262),
 ('aerobic', '10n', 1.0, 0.2): (0.014, 0.016),
 ('aerobic', '10n', 1.0, 0.4): (0.044, 0.051),
 ('aerobic', '10n', 1.0, 0.6): (0.106, 0.122),
 ('aerobic', '10n', 1.0, 0.8): (0.226, 0.263),
 ('aerobic', '10n', 10.0, 0.2): (0.015, 0.017),
 ('aerobic', '10n', 10.0, 0.4): (0.045, 0.054),
 ('aerobic', '10n', 10.0, 0.6): (0.108, 0.127),
 ('aerobic', '10n', 10.0, 0.8): (0.23, 0.268),
 ('aerobic', '10n', 100.0, 0.2): (0.027, 0.031),
 ('aerobic', '10n', 100.0, 0.4): (0.064, 0.074),
 ('aerobic', '10n', 100.0, 0.6): (0.134, 0.155),
 ('aerobic', '10n', 100.0, 0.8): (0.266, 0.301),
 ('aerobic', '10n', 1000.0, 0.2): (0.132, 0.139),
 ('aerobic', '10n', 1000.0, 0.4): (0.202, 0.215),
 ('aerobic', '10n', 1000.0, 0.6): (0.311, 0.333),
 ('aerobic', '10n', 1000.0, 0.8): (0.477, 0.508),
 ('aerobic', 'n', 0.1, 0.2): (0.052, 0.062),
 ('aerobic', 'n', 0.1, 0.4): (0.12, 0.142),
 ('aerobic', 'n', 0.1, 0.6): (0.205, 0.243),
 ('aerobic', 'n', 0.1, 0.8): (0.317, 0.369),
 ('aerobic', 'n', 1.0, 0.2): (0.053, 0.063),
 ('aerobic', 'n', 1.0, 0.4): (0.121, 0.142),
 ('aerobic', 'n', 1.0, 0.6): (0.209, 0.242),
 ('aerobic', 'n', 1.0, 0.8): (0.317, 0.369),
 ('aerobic', 'n', 10.0, 0.2): (0.057, 0.068),
 ('aerobic', 'n', 10.0, 0.4): (0.125, 0.149),
 ('aerobic', 'n', 10.0, 0.6): (0.212, 0.251),
 ('aerobic', 'n', 10.0, 0.8): (0.324, 0.377),
 ('aerobic', 'n', 100.0, 0.2): (0.103, 0.117),
 ('aerobic', 'n', 100.0, 0.4): (0.173, 0.2),
 ('aerobic', 'n', 100.0, 0.6): (0.26, 0.301),
 ('aerobic', 'n', 100.0, 0.8): (0.371, 0.42),
 ('aerobic', 'n', 1000.0, 0.2): (0.397, 0.416),
 ('aerobic', 'n', 1000.0, 0.4): (0.462, 0.491),
 ('aerobic', 'n', 1000.0, 0.6): (0.538, 0.577),
 ('aerobic', 'n', 1000.0, 0.8): (0.628, 0.669),
 ('anaerobic', '100n', 0.1, 0.2): (0.003, 0.004),
 ('anaerobic', '100n', 0.1, 0.4): (0.015, 0.017),
 ('anaerobic', '100n', 0.1, 0.6): (0.057, 0.066),
 ('anaerobic', '100n', 0.1, 0.8): (0.195, 0.218),
 ('anaerobic', '100n', 1.0, 0.2): (0.003, 0.004),
 ('anaerobic', '100n', 1.0, 0.4): (0.015, 0.018),
 ('anaerobic', '100n', 1.0, 0.6): (0.058, 0.066),
 ('anaerobic', '100n', 1.0, 0.8): (0.196, 0.219),
 ('anaerobic', '100n', 10.0, 0.2): (0.003, 0.004),
 ('anaerobic', '100n', 10.0, 0.4): (0.016, 0.018),
 ('anaerobic', '100n', 10.0, 0.6): (0.059, 0.067),
 ('anaerobic', '100n', 10.0, 0.8): (0.198, 0.221),
 ('anaerobic', '100n', 100.0, 0.2): (0.005, 0.006),
 ('anaerobic', '100n', 100.0, 0.4): (0.021, 0.023),
 ('anaerobic', '100n', 100.0, 0.6): (0.069, 0.078),
 ('anaerobic', '100n', 100.0, 0.8): (0.217, 0.242),
 ('anaerobic', '100n', 1000.0, 0.2): (0.024, 0.026),
 ('anaerobic', '100n', 1000.0, 0.4): (0.059, 0.063),
 ('anaerobic', '100n', 1000.0, 0.6): (0.142, 0.151),
 ('anaerobic', '100n', 1000.0, 0.8): (0.339, 0.359),
 ('anaerobic', '10n', 0.1, 0.2): (0.018, 0.021),
 ('anaerobic', '10n', 0.1, 0.4): (0.057, 0.066),
 ('anaerobic', '10n', 0.1, 0.6): (0.139, 0.16),
 ('anaerobic', '10n', 0.1, 0.8): (0.304, 0.34),
 ('anaerobic', '10n', 1.0, 0.2): (0.018, 0.021),
 ('anaerobic', '10n', 1.0, 0.4): (0.058, 0.066),
 ('anaerobic', '10n', 1.0, 0.6): (0.14, 0.16),
 ('anaerobic', '10n', 1.0, 0.8): (0.305, 0.342),
 ('anaerobic', '10n', 10.0, 0.2): (0.019, 0.022),
 ('anaerobic', '10n', 10.0, 0.4): (0.059, 0.069),
 ('anaerobic', '10n', 10.0, 0.6): (0.143, 0.162),
 ('anaerobic', '10n', 10.0, 0.8): (0.308, 0.345),
 ('anaerobic', '10n', 100.0, 0.2): (0.032, 0.035),
 ('anaerobic', '10n', 100.0, 0.4): (0.077, 0.088),
 ('anaerobic', '10n', 100.0, 0.6): (0.168, 0.189),
 ('anaerobic', '10n', 100.0, 0.8): (0.337, 0.376),
 ('anaerobic', '10n', 1000.0, 0.2): (0.134, 0.141),
 ('anaerobic', '10n', 1000.0, 0.4): (0.212, 0.226),
 ('anaerobic', '10n', 1000.0, 0.6): (0.333, 0.354),
 ('anaerobic', '10n', 1000.0, 0.8): (0.519, 0.551),
 ('anaerobic', 'n', 0.1, 0.2): (0.07, 0.081),
 ('anaerobic', 'n', 0.1, 0.4): (0.16, 0.183),
 ('anaerobic', 'n', 0.1, 0.6): (0.275, 0.316),
 ('anaerobic', 'n', 0.1, 0.8): (0.428, 0.478),
 ('anaerobic', 'n', 1.0, 0.2): (0.07, 0.081),
 ('anaerobic', 'n', 1.0, 0.4): (0.16, 0.185),
 ('anaerobic', 'n', 1.0, 0.6): (0.276, 0.316),
 ('anaerobic', 'n', 1.0, 0.8): (0.429, 0.481),
 ('anaerobic', 'n', 10.0, 0.2): (0.074, 0.086),
 ('anaerobic', 'n', 10.0, 0.4): (0.165, 0.191),
 ('anaerobic', 'n', 10.0, 0.6): (0.282, 0.32),
 ('anaerobic', 'n', 10.0, 0.8): (0.433, 0.485),
 ('anaerobic', 'n', 100.0, 0.2): (0.119, 0.133),
 ('anaerobic', 'n', 100.0, 0.4): (0.209, 0.237),
 ('anaerobic', 'n', 100.0, 0.6): (0.326, 0.367),
 ('anaerobic', 'n', 100.0, 0.8): (0.471, 0.524),
 ('anaerobic', 'n', 1000.0, 0.2): (0.405, 0.426),
 ('anaerobic', 'n', 1000.0, 0.4): (0.485, 0.517),
 ('anaerobic', 'n', 1000.0, 0.6): (0.577, 0.615),
 ('anaerobic', 'n', 1000.0, 0.8): (0.684, 0.726)}
