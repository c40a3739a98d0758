import os

import hypothesis

# sympy field arithmetic is too slow for the default deadline
hypothesis.settings.register_profile('default', deadline=None, max_examples=25)
hypothesis.settings.register_profile('ci', deadline=None, max_examples=100)
hypothesis.settings.load_profile(os.getenv('HYPOTHESIS_PROFILE', 'default'))
