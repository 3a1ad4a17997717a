from hypothesis import settings

# property tests do exact bignum work whose per-example time varies wildly
# with the drawn magnitudes; wall-clock deadlines only add flakiness
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")
