from hypothesis import settings

# derandomized so that repeated runs exercise the same examples
settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")
