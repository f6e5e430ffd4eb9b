# -*- coding: utf-8 -*-
# Copyright (c) 2018 Richard Hull
# See LICENSE.md for details.

import logging

logging.getLogger(__name__).addHandler(logging.NullHandler())
