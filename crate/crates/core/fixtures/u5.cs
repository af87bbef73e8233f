# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

# Congruence lattice of the five-element algebra U with its commutator
# table; only the lattice and the commutator are recorded.
kind: commutator-structure
name: U
elements: Delta alpha beta gamma delta Nabla

leq:
Delta < delta
delta < alpha
delta < beta
delta < gamma
alpha < Nabla
beta < Nabla
gamma < Nabla

comm:
Delta Delta Delta Delta Delta Delta
Delta delta delta delta delta alpha
Delta delta delta delta delta beta
Delta delta delta gamma delta gamma
Delta delta delta delta Delta delta
Delta alpha beta gamma delta Nabla
