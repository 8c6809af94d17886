# Generated by mdnewton._codegen -- do not edit.
"""Straight-line 4-limb arithmetic."""

LIMBS = 4
SPLITTER = 134217729.0

def add(a0, a1, a2, a3, b0, b1, b2, b3):
    t1 = a0
    t2 = a1
    t3 = a2
    t4 = a3
    t5 = b0
    t6 = b1
    t7 = b2
    t8 = b3
    if abs(t1) < abs(t5):
        t1, t5 = t5, t1
    if abs(t3) < abs(t7):
        t3, t7 = t7, t3
    if abs(t3) < abs(t5):
        t3, t5 = t5, t3
    if abs(t2) < abs(t6):
        t2, t6 = t6, t2
    if abs(t4) < abs(t8):
        t4, t8 = t8, t4
    if abs(t4) < abs(t6):
        t4, t6 = t6, t4
    if abs(t2) < abs(t3):
        t2, t3 = t3, t2
    if abs(t4) < abs(t5):
        t4, t5 = t5, t4
    if abs(t6) < abs(t7):
        t6, t7 = t7, t6
    t9 = t7 + t8
    t10 = t9 - t7
    t11 = t9 - t10
    t12 = t7 - t11
    t13 = t8 - t10
    t14 = t12 + t13
    t15 = t6 + t9
    t16 = t15 - t6
    t17 = t15 - t16
    t18 = t6 - t17
    t19 = t9 - t16
    t20 = t18 + t19
    t21 = t5 + t15
    t22 = t21 - t5
    t23 = t21 - t22
    t24 = t5 - t23
    t25 = t15 - t22
    t26 = t24 + t25
    t27 = t4 + t21
    t28 = t27 - t4
    t29 = t27 - t28
    t30 = t4 - t29
    t31 = t21 - t28
    t32 = t30 + t31
    t33 = t3 + t27
    t34 = t33 - t3
    t35 = t33 - t34
    t36 = t3 - t35
    t37 = t27 - t34
    t38 = t36 + t37
    t39 = t2 + t33
    t40 = t39 - t2
    t41 = t39 - t40
    t42 = t2 - t41
    t43 = t33 - t40
    t44 = t42 + t43
    t45 = t1 + t39
    t46 = t45 - t1
    t47 = t45 - t46
    t48 = t1 - t47
    t49 = t39 - t46
    t50 = t48 + t49
    t51 = 0.0
    t52 = 0.0
    t53 = 0.0
    t54 = 0.0
    t55 = 0
    t56 = t45
    t57 = t56 + t50
    t58 = t57 - t56
    t59 = t57 - t58
    t60 = t56 - t59
    t61 = t50 - t58
    t62 = t60 + t61
    if t62 != 0.0:
        if t55 == 0:
            t51 = t57
        elif t55 == 1:
            t52 = t57
        elif t55 == 2:
            t53 = t57
        elif t55 == 3:
            t54 = t57
        t55 += 1
        t56 = t62
    else:
        t56 = t57
    t63 = t56 + t44
    t64 = t63 - t56
    t65 = t63 - t64
    t66 = t56 - t65
    t67 = t44 - t64
    t68 = t66 + t67
    if t68 != 0.0:
        if t55 == 0:
            t51 = t63
        elif t55 == 1:
            t52 = t63
        elif t55 == 2:
            t53 = t63
        elif t55 == 3:
            t54 = t63
        t55 += 1
        t56 = t68
    else:
        t56 = t63
    t69 = t56 + t38
    t70 = t69 - t56
    t71 = t69 - t70
    t72 = t56 - t71
    t73 = t38 - t70
    t74 = t72 + t73
    if t74 != 0.0:
        if t55 == 0:
            t51 = t69
        elif t55 == 1:
            t52 = t69
        elif t55 == 2:
            t53 = t69
        elif t55 == 3:
            t54 = t69
        t55 += 1
        t56 = t74
    else:
        t56 = t69
    t75 = t56 + t32
    t76 = t75 - t56
    t77 = t75 - t76
    t78 = t56 - t77
    t79 = t32 - t76
    t80 = t78 + t79
    if t80 != 0.0:
        if t55 == 0:
            t51 = t75
        elif t55 == 1:
            t52 = t75
        elif t55 == 2:
            t53 = t75
        elif t55 == 3:
            t54 = t75
        t55 += 1
        t56 = t80
    else:
        t56 = t75
    t81 = t56 + t26
    t82 = t81 - t56
    t83 = t81 - t82
    t84 = t56 - t83
    t85 = t26 - t82
    t86 = t84 + t85
    if t86 != 0.0:
        if t55 == 0:
            t51 = t81
        elif t55 == 1:
            t52 = t81
        elif t55 == 2:
            t53 = t81
        elif t55 == 3:
            t54 = t81
        t55 += 1
        t56 = t86
    else:
        t56 = t81
    t87 = t56 + t20
    t88 = t87 - t56
    t89 = t87 - t88
    t90 = t56 - t89
    t91 = t20 - t88
    t92 = t90 + t91
    if t92 != 0.0:
        if t55 == 0:
            t51 = t87
        elif t55 == 1:
            t52 = t87
        elif t55 == 2:
            t53 = t87
        elif t55 == 3:
            t54 = t87
        t55 += 1
        t56 = t92
    else:
        t56 = t87
    t93 = t56 + t14
    t94 = t93 - t56
    t95 = t93 - t94
    t96 = t56 - t95
    t97 = t14 - t94
    t98 = t96 + t97
    if t98 != 0.0:
        if t55 == 0:
            t51 = t93
        elif t55 == 1:
            t52 = t93
        elif t55 == 2:
            t53 = t93
        elif t55 == 3:
            t54 = t93
        t55 += 1
        t56 = t98
    else:
        t56 = t93
    if t55 == 0:
        t51 = t56
    elif t55 == 1:
        t52 = t56
    elif t55 == 2:
        t53 = t56
    elif t55 == 3:
        t54 = t56
    t99 = t51 + t52
    t100 = t99 - t51
    t101 = t52 - t100
    t102 = t101 + t53
    t103 = t102 - t101
    t104 = t53 - t103
    t105 = t104 + t54
    t106 = t105 - t104
    t107 = t54 - t106
    return (t99, t102, t105, t107,)


def sub(a0, a1, a2, a3, b0, b1, b2, b3):
    t1 = -b0
    t2 = -b1
    t3 = -b2
    t4 = -b3
    t5 = a0
    t6 = a1
    t7 = a2
    t8 = a3
    t9 = t1
    t10 = t2
    t11 = t3
    t12 = t4
    if abs(t5) < abs(t9):
        t5, t9 = t9, t5
    if abs(t7) < abs(t11):
        t7, t11 = t11, t7
    if abs(t7) < abs(t9):
        t7, t9 = t9, t7
    if abs(t6) < abs(t10):
        t6, t10 = t10, t6
    if abs(t8) < abs(t12):
        t8, t12 = t12, t8
    if abs(t8) < abs(t10):
        t8, t10 = t10, t8
    if abs(t6) < abs(t7):
        t6, t7 = t7, t6
    if abs(t8) < abs(t9):
        t8, t9 = t9, t8
    if abs(t10) < abs(t11):
        t10, t11 = t11, t10
    t13 = t11 + t12
    t14 = t13 - t11
    t15 = t13 - t14
    t16 = t11 - t15
    t17 = t12 - t14
    t18 = t16 + t17
    t19 = t10 + t13
    t20 = t19 - t10
    t21 = t19 - t20
    t22 = t10 - t21
    t23 = t13 - t20
    t24 = t22 + t23
    t25 = t9 + t19
    t26 = t25 - t9
    t27 = t25 - t26
    t28 = t9 - t27
    t29 = t19 - t26
    t30 = t28 + t29
    t31 = t8 + t25
    t32 = t31 - t8
    t33 = t31 - t32
    t34 = t8 - t33
    t35 = t25 - t32
    t36 = t34 + t35
    t37 = t7 + t31
    t38 = t37 - t7
    t39 = t37 - t38
    t40 = t7 - t39
    t41 = t31 - t38
    t42 = t40 + t41
    t43 = t6 + t37
    t44 = t43 - t6
    t45 = t43 - t44
    t46 = t6 - t45
    t47 = t37 - t44
    t48 = t46 + t47
    t49 = t5 + t43
    t50 = t49 - t5
    t51 = t49 - t50
    t52 = t5 - t51
    t53 = t43 - t50
    t54 = t52 + t53
    t55 = 0.0
    t56 = 0.0
    t57 = 0.0
    t58 = 0.0
    t59 = 0
    t60 = t49
    t61 = t60 + t54
    t62 = t61 - t60
    t63 = t61 - t62
    t64 = t60 - t63
    t65 = t54 - t62
    t66 = t64 + t65
    if t66 != 0.0:
        if t59 == 0:
            t55 = t61
        elif t59 == 1:
            t56 = t61
        elif t59 == 2:
            t57 = t61
        elif t59 == 3:
            t58 = t61
        t59 += 1
        t60 = t66
    else:
        t60 = t61
    t67 = t60 + t48
    t68 = t67 - t60
    t69 = t67 - t68
    t70 = t60 - t69
    t71 = t48 - t68
    t72 = t70 + t71
    if t72 != 0.0:
        if t59 == 0:
            t55 = t67
        elif t59 == 1:
            t56 = t67
        elif t59 == 2:
            t57 = t67
        elif t59 == 3:
            t58 = t67
        t59 += 1
        t60 = t72
    else:
        t60 = t67
    t73 = t60 + t42
    t74 = t73 - t60
    t75 = t73 - t74
    t76 = t60 - t75
    t77 = t42 - t74
    t78 = t76 + t77
    if t78 != 0.0:
        if t59 == 0:
            t55 = t73
        elif t59 == 1:
            t56 = t73
        elif t59 == 2:
            t57 = t73
        elif t59 == 3:
            t58 = t73
        t59 += 1
        t60 = t78
    else:
        t60 = t73
    t79 = t60 + t36
    t80 = t79 - t60
    t81 = t79 - t80
    t82 = t60 - t81
    t83 = t36 - t80
    t84 = t82 + t83
    if t84 != 0.0:
        if t59 == 0:
            t55 = t79
        elif t59 == 1:
            t56 = t79
        elif t59 == 2:
            t57 = t79
        elif t59 == 3:
            t58 = t79
        t59 += 1
        t60 = t84
    else:
        t60 = t79
    t85 = t60 + t30
    t86 = t85 - t60
    t87 = t85 - t86
    t88 = t60 - t87
    t89 = t30 - t86
    t90 = t88 + t89
    if t90 != 0.0:
        if t59 == 0:
            t55 = t85
        elif t59 == 1:
            t56 = t85
        elif t59 == 2:
            t57 = t85
        elif t59 == 3:
            t58 = t85
        t59 += 1
        t60 = t90
    else:
        t60 = t85
    t91 = t60 + t24
    t92 = t91 - t60
    t93 = t91 - t92
    t94 = t60 - t93
    t95 = t24 - t92
    t96 = t94 + t95
    if t96 != 0.0:
        if t59 == 0:
            t55 = t91
        elif t59 == 1:
            t56 = t91
        elif t59 == 2:
            t57 = t91
        elif t59 == 3:
            t58 = t91
        t59 += 1
        t60 = t96
    else:
        t60 = t91
    t97 = t60 + t18
    t98 = t97 - t60
    t99 = t97 - t98
    t100 = t60 - t99
    t101 = t18 - t98
    t102 = t100 + t101
    if t102 != 0.0:
        if t59 == 0:
            t55 = t97
        elif t59 == 1:
            t56 = t97
        elif t59 == 2:
            t57 = t97
        elif t59 == 3:
            t58 = t97
        t59 += 1
        t60 = t102
    else:
        t60 = t97
    if t59 == 0:
        t55 = t60
    elif t59 == 1:
        t56 = t60
    elif t59 == 2:
        t57 = t60
    elif t59 == 3:
        t58 = t60
    t103 = t55 + t56
    t104 = t103 - t55
    t105 = t56 - t104
    t106 = t105 + t57
    t107 = t106 - t105
    t108 = t57 - t107
    t109 = t108 + t58
    t110 = t109 - t108
    t111 = t58 - t110
    return (t103, t106, t109, t111,)


def mul(a0, a1, a2, a3, b0, b1, b2, b3):
    t1 = SPLITTER * a0
    t2 = t1 - a0
    t3 = t1 - t2
    t4 = a0 - t3
    t5 = SPLITTER * a1
    t6 = t5 - a1
    t7 = t5 - t6
    t8 = a1 - t7
    t9 = SPLITTER * a2
    t10 = t9 - a2
    t11 = t9 - t10
    t12 = a2 - t11
    t13 = SPLITTER * a3
    t14 = t13 - a3
    t15 = t13 - t14
    t16 = a3 - t15
    t17 = SPLITTER * b0
    t18 = t17 - b0
    t19 = t17 - t18
    t20 = b0 - t19
    t21 = SPLITTER * b1
    t22 = t21 - b1
    t23 = t21 - t22
    t24 = b1 - t23
    t25 = SPLITTER * b2
    t26 = t25 - b2
    t27 = t25 - t26
    t28 = b2 - t27
    t29 = SPLITTER * b3
    t30 = t29 - b3
    t31 = t29 - t30
    t32 = b3 - t31
    t33 = a0 * b0
    t34 = t3 * t19
    t35 = t34 - t33
    t36 = t3 * t20
    t37 = t35 + t36
    t38 = t4 * t19
    t39 = t37 + t38
    t40 = t4 * t20
    t41 = t39 + t40
    t42 = a0 * b1
    t43 = t3 * t23
    t44 = t43 - t42
    t45 = t3 * t24
    t46 = t44 + t45
    t47 = t4 * t23
    t48 = t46 + t47
    t49 = t4 * t24
    t50 = t48 + t49
    t51 = a1 * b0
    t52 = t7 * t19
    t53 = t52 - t51
    t54 = t7 * t20
    t55 = t53 + t54
    t56 = t8 * t19
    t57 = t55 + t56
    t58 = t8 * t20
    t59 = t57 + t58
    t60 = a0 * b2
    t61 = t3 * t27
    t62 = t61 - t60
    t63 = t3 * t28
    t64 = t62 + t63
    t65 = t4 * t27
    t66 = t64 + t65
    t67 = t4 * t28
    t68 = t66 + t67
    t69 = a1 * b1
    t70 = t7 * t23
    t71 = t70 - t69
    t72 = t7 * t24
    t73 = t71 + t72
    t74 = t8 * t23
    t75 = t73 + t74
    t76 = t8 * t24
    t77 = t75 + t76
    t78 = a2 * b0
    t79 = t11 * t19
    t80 = t79 - t78
    t81 = t11 * t20
    t82 = t80 + t81
    t83 = t12 * t19
    t84 = t82 + t83
    t85 = t12 * t20
    t86 = t84 + t85
    t87 = a0 * b3
    t88 = t3 * t31
    t89 = t88 - t87
    t90 = t3 * t32
    t91 = t89 + t90
    t92 = t4 * t31
    t93 = t91 + t92
    t94 = t4 * t32
    t95 = t93 + t94
    t96 = a1 * b2
    t97 = t7 * t27
    t98 = t97 - t96
    t99 = t7 * t28
    t100 = t98 + t99
    t101 = t8 * t27
    t102 = t100 + t101
    t103 = t8 * t28
    t104 = t102 + t103
    t105 = a2 * b1
    t106 = t11 * t23
    t107 = t106 - t105
    t108 = t11 * t24
    t109 = t107 + t108
    t110 = t12 * t23
    t111 = t109 + t110
    t112 = t12 * t24
    t113 = t111 + t112
    t114 = a3 * b0
    t115 = t15 * t19
    t116 = t115 - t114
    t117 = t15 * t20
    t118 = t116 + t117
    t119 = t16 * t19
    t120 = t118 + t119
    t121 = t16 * t20
    t122 = t120 + t121
    t123 = a1 * b3
    t124 = a2 * b2
    t125 = a3 * b1
    t126 = t41 + t42
    t127 = t126 - t41
    t128 = t126 - t127
    t129 = t41 - t128
    t130 = t42 - t127
    t131 = t129 + t130
    t132 = t126 + t51
    t133 = t132 - t126
    t134 = t132 - t133
    t135 = t126 - t134
    t136 = t51 - t133
    t137 = t135 + t136
    t138 = t50 + t59
    t139 = t138 - t50
    t140 = t138 - t139
    t141 = t50 - t140
    t142 = t59 - t139
    t143 = t141 + t142
    t144 = t138 + t60
    t145 = t144 - t138
    t146 = t144 - t145
    t147 = t138 - t146
    t148 = t60 - t145
    t149 = t147 + t148
    t150 = t144 + t69
    t151 = t150 - t144
    t152 = t150 - t151
    t153 = t144 - t152
    t154 = t69 - t151
    t155 = t153 + t154
    t156 = t150 + t78
    t157 = t156 - t150
    t158 = t156 - t157
    t159 = t150 - t158
    t160 = t78 - t157
    t161 = t159 + t160
    t162 = t156 + t131
    t163 = t162 - t156
    t164 = t162 - t163
    t165 = t156 - t164
    t166 = t131 - t163
    t167 = t165 + t166
    t168 = t162 + t137
    t169 = t168 - t162
    t170 = t168 - t169
    t171 = t162 - t170
    t172 = t137 - t169
    t173 = t171 + t172
    t174 = t68 + t77
    t175 = t174 - t68
    t176 = t174 - t175
    t177 = t68 - t176
    t178 = t77 - t175
    t179 = t177 + t178
    t180 = t174 + t86
    t181 = t180 - t174
    t182 = t180 - t181
    t183 = t174 - t182
    t184 = t86 - t181
    t185 = t183 + t184
    t186 = t180 + t87
    t187 = t186 - t180
    t188 = t186 - t187
    t189 = t180 - t188
    t190 = t87 - t187
    t191 = t189 + t190
    t192 = t186 + t96
    t193 = t192 - t186
    t194 = t192 - t193
    t195 = t186 - t194
    t196 = t96 - t193
    t197 = t195 + t196
    t198 = t192 + t105
    t199 = t198 - t192
    t200 = t198 - t199
    t201 = t192 - t200
    t202 = t105 - t199
    t203 = t201 + t202
    t204 = t198 + t114
    t205 = t204 - t198
    t206 = t204 - t205
    t207 = t198 - t206
    t208 = t114 - t205
    t209 = t207 + t208
    t210 = t204 + t143
    t211 = t210 - t204
    t212 = t210 - t211
    t213 = t204 - t212
    t214 = t143 - t211
    t215 = t213 + t214
    t216 = t210 + t149
    t217 = t216 - t210
    t218 = t216 - t217
    t219 = t210 - t218
    t220 = t149 - t217
    t221 = t219 + t220
    t222 = t216 + t155
    t223 = t222 - t216
    t224 = t222 - t223
    t225 = t216 - t224
    t226 = t155 - t223
    t227 = t225 + t226
    t228 = t222 + t161
    t229 = t228 - t222
    t230 = t228 - t229
    t231 = t222 - t230
    t232 = t161 - t229
    t233 = t231 + t232
    t234 = t228 + t167
    t235 = t234 - t228
    t236 = t234 - t235
    t237 = t228 - t236
    t238 = t167 - t235
    t239 = t237 + t238
    t240 = t234 + t173
    t241 = t240 - t234
    t242 = t240 - t241
    t243 = t234 - t242
    t244 = t173 - t241
    t245 = t243 + t244
    t246 = t95 + t104
    t247 = t246 + t113
    t248 = t247 + t122
    t249 = t248 + t123
    t250 = t249 + t124
    t251 = t250 + t125
    t252 = t251 + t179
    t253 = t252 + t185
    t254 = t253 + t191
    t255 = t254 + t197
    t256 = t255 + t203
    t257 = t256 + t209
    t258 = t257 + t215
    t259 = t258 + t221
    t260 = t259 + t227
    t261 = t260 + t233
    t262 = t261 + t239
    t263 = t262 + t245
    t264 = t240 + t263
    t265 = t264 - t240
    t266 = t264 - t265
    t267 = t240 - t266
    t268 = t263 - t265
    t269 = t267 + t268
    t270 = t168 + t264
    t271 = t270 - t168
    t272 = t270 - t271
    t273 = t168 - t272
    t274 = t264 - t271
    t275 = t273 + t274
    t276 = t132 + t270
    t277 = t276 - t132
    t278 = t276 - t277
    t279 = t132 - t278
    t280 = t270 - t277
    t281 = t279 + t280
    t282 = t33 + t276
    t283 = t282 - t33
    t284 = t282 - t283
    t285 = t33 - t284
    t286 = t276 - t283
    t287 = t285 + t286
    t288 = 0.0
    t289 = 0.0
    t290 = 0.0
    t291 = 0.0
    t292 = 0
    t293 = t282
    t294 = t293 + t287
    t295 = t294 - t293
    t296 = t294 - t295
    t297 = t293 - t296
    t298 = t287 - t295
    t299 = t297 + t298
    if t299 != 0.0:
        if t292 == 0:
            t288 = t294
        elif t292 == 1:
            t289 = t294
        elif t292 == 2:
            t290 = t294
        elif t292 == 3:
            t291 = t294
        t292 += 1
        t293 = t299
    else:
        t293 = t294
    t300 = t293 + t281
    t301 = t300 - t293
    t302 = t300 - t301
    t303 = t293 - t302
    t304 = t281 - t301
    t305 = t303 + t304
    if t305 != 0.0:
        if t292 == 0:
            t288 = t300
        elif t292 == 1:
            t289 = t300
        elif t292 == 2:
            t290 = t300
        elif t292 == 3:
            t291 = t300
        t292 += 1
        t293 = t305
    else:
        t293 = t300
    t306 = t293 + t275
    t307 = t306 - t293
    t308 = t306 - t307
    t309 = t293 - t308
    t310 = t275 - t307
    t311 = t309 + t310
    if t311 != 0.0:
        if t292 == 0:
            t288 = t306
        elif t292 == 1:
            t289 = t306
        elif t292 == 2:
            t290 = t306
        elif t292 == 3:
            t291 = t306
        t292 += 1
        t293 = t311
    else:
        t293 = t306
    t312 = t293 + t269
    t313 = t312 - t293
    t314 = t312 - t313
    t315 = t293 - t314
    t316 = t269 - t313
    t317 = t315 + t316
    if t317 != 0.0:
        if t292 == 0:
            t288 = t312
        elif t292 == 1:
            t289 = t312
        elif t292 == 2:
            t290 = t312
        elif t292 == 3:
            t291 = t312
        t292 += 1
        t293 = t317
    else:
        t293 = t312
    if t292 == 0:
        t288 = t293
    elif t292 == 1:
        t289 = t293
    elif t292 == 2:
        t290 = t293
    elif t292 == 3:
        t291 = t293
    t318 = t288 + t289
    t319 = t318 - t288
    t320 = t289 - t319
    t321 = t320 + t290
    t322 = t321 - t320
    t323 = t290 - t322
    t324 = t323 + t291
    t325 = t324 - t323
    t326 = t291 - t325
    return (t318, t321, t324, t326,)
