# Generated by mdnewton._codegen -- do not edit.
"""Straight-line 8-limb arithmetic."""

LIMBS = 8
SPLITTER = 134217729.0

def add(a0, a1, a2, a3, a4, a5, a6, a7, b0, b1, b2, b3, b4, b5, b6, b7):
    t1 = a0
    t2 = a1
    t3 = a2
    t4 = a3
    t5 = a4
    t6 = a5
    t7 = a6
    t8 = a7
    t9 = b0
    t10 = b1
    t11 = b2
    t12 = b3
    t13 = b4
    t14 = b5
    t15 = b6
    t16 = b7
    if abs(t1) < abs(t9):
        t1, t9 = t9, t1
    if abs(t5) < abs(t13):
        t5, t13 = t13, t5
    if abs(t5) < abs(t9):
        t5, t9 = t9, t5
    if abs(t3) < abs(t11):
        t3, t11 = t11, t3
    if abs(t7) < abs(t15):
        t7, t15 = t15, t7
    if abs(t7) < abs(t11):
        t7, t11 = t11, t7
    if abs(t3) < abs(t5):
        t3, t5 = t5, t3
    if abs(t7) < abs(t9):
        t7, t9 = t9, t7
    if abs(t11) < abs(t13):
        t11, t13 = t13, t11
    if abs(t2) < abs(t10):
        t2, t10 = t10, t2
    if abs(t6) < abs(t14):
        t6, t14 = t14, t6
    if abs(t6) < abs(t10):
        t6, t10 = t10, t6
    if abs(t4) < abs(t12):
        t4, t12 = t12, t4
    if abs(t8) < abs(t16):
        t8, t16 = t16, t8
    if abs(t8) < abs(t12):
        t8, t12 = t12, t8
    if abs(t4) < abs(t6):
        t4, t6 = t6, t4
    if abs(t8) < abs(t10):
        t8, t10 = t10, t8
    if abs(t12) < abs(t14):
        t12, t14 = t14, t12
    if abs(t2) < abs(t3):
        t2, t3 = t3, t2
    if abs(t4) < abs(t5):
        t4, t5 = t5, t4
    if abs(t6) < abs(t7):
        t6, t7 = t7, t6
    if abs(t8) < abs(t9):
        t8, t9 = t9, t8
    if abs(t10) < abs(t11):
        t10, t11 = t11, t10
    if abs(t12) < abs(t13):
        t12, t13 = t13, t12
    if abs(t14) < abs(t15):
        t14, t15 = t15, t14
    t17 = t15 + t16
    t18 = t17 - t15
    t19 = t17 - t18
    t20 = t15 - t19
    t21 = t16 - t18
    t22 = t20 + t21
    t23 = t14 + t17
    t24 = t23 - t14
    t25 = t23 - t24
    t26 = t14 - t25
    t27 = t17 - t24
    t28 = t26 + t27
    t29 = t13 + t23
    t30 = t29 - t13
    t31 = t29 - t30
    t32 = t13 - t31
    t33 = t23 - t30
    t34 = t32 + t33
    t35 = t12 + t29
    t36 = t35 - t12
    t37 = t35 - t36
    t38 = t12 - t37
    t39 = t29 - t36
    t40 = t38 + t39
    t41 = t11 + t35
    t42 = t41 - t11
    t43 = t41 - t42
    t44 = t11 - t43
    t45 = t35 - t42
    t46 = t44 + t45
    t47 = t10 + t41
    t48 = t47 - t10
    t49 = t47 - t48
    t50 = t10 - t49
    t51 = t41 - t48
    t52 = t50 + t51
    t53 = t9 + t47
    t54 = t53 - t9
    t55 = t53 - t54
    t56 = t9 - t55
    t57 = t47 - t54
    t58 = t56 + t57
    t59 = t8 + t53
    t60 = t59 - t8
    t61 = t59 - t60
    t62 = t8 - t61
    t63 = t53 - t60
    t64 = t62 + t63
    t65 = t7 + t59
    t66 = t65 - t7
    t67 = t65 - t66
    t68 = t7 - t67
    t69 = t59 - t66
    t70 = t68 + t69
    t71 = t6 + t65
    t72 = t71 - t6
    t73 = t71 - t72
    t74 = t6 - t73
    t75 = t65 - t72
    t76 = t74 + t75
    t77 = t5 + t71
    t78 = t77 - t5
    t79 = t77 - t78
    t80 = t5 - t79
    t81 = t71 - t78
    t82 = t80 + t81
    t83 = t4 + t77
    t84 = t83 - t4
    t85 = t83 - t84
    t86 = t4 - t85
    t87 = t77 - t84
    t88 = t86 + t87
    t89 = t3 + t83
    t90 = t89 - t3
    t91 = t89 - t90
    t92 = t3 - t91
    t93 = t83 - t90
    t94 = t92 + t93
    t95 = t2 + t89
    t96 = t95 - t2
    t97 = t95 - t96
    t98 = t2 - t97
    t99 = t89 - t96
    t100 = t98 + t99
    t101 = t1 + t95
    t102 = t101 - t1
    t103 = t101 - t102
    t104 = t1 - t103
    t105 = t95 - t102
    t106 = t104 + t105
    t107 = 0.0
    t108 = 0.0
    t109 = 0.0
    t110 = 0.0
    t111 = 0.0
    t112 = 0.0
    t113 = 0.0
    t114 = 0.0
    t115 = 0
    t116 = t101
    t117 = t116 + t106
    t118 = t117 - t116
    t119 = t117 - t118
    t120 = t116 - t119
    t121 = t106 - t118
    t122 = t120 + t121
    if t122 != 0.0:
        if t115 == 0:
            t107 = t117
        elif t115 == 1:
            t108 = t117
        elif t115 == 2:
            t109 = t117
        elif t115 == 3:
            t110 = t117
        elif t115 == 4:
            t111 = t117
        elif t115 == 5:
            t112 = t117
        elif t115 == 6:
            t113 = t117
        elif t115 == 7:
            t114 = t117
        t115 += 1
        t116 = t122
    else:
        t116 = t117
    t123 = t116 + t100
    t124 = t123 - t116
    t125 = t123 - t124
    t126 = t116 - t125
    t127 = t100 - t124
    t128 = t126 + t127
    if t128 != 0.0:
        if t115 == 0:
            t107 = t123
        elif t115 == 1:
            t108 = t123
        elif t115 == 2:
            t109 = t123
        elif t115 == 3:
            t110 = t123
        elif t115 == 4:
            t111 = t123
        elif t115 == 5:
            t112 = t123
        elif t115 == 6:
            t113 = t123
        elif t115 == 7:
            t114 = t123
        t115 += 1
        t116 = t128
    else:
        t116 = t123
    t129 = t116 + t94
    t130 = t129 - t116
    t131 = t129 - t130
    t132 = t116 - t131
    t133 = t94 - t130
    t134 = t132 + t133
    if t134 != 0.0:
        if t115 == 0:
            t107 = t129
        elif t115 == 1:
            t108 = t129
        elif t115 == 2:
            t109 = t129
        elif t115 == 3:
            t110 = t129
        elif t115 == 4:
            t111 = t129
        elif t115 == 5:
            t112 = t129
        elif t115 == 6:
            t113 = t129
        elif t115 == 7:
            t114 = t129
        t115 += 1
        t116 = t134
    else:
        t116 = t129
    t135 = t116 + t88
    t136 = t135 - t116
    t137 = t135 - t136
    t138 = t116 - t137
    t139 = t88 - t136
    t140 = t138 + t139
    if t140 != 0.0:
        if t115 == 0:
            t107 = t135
        elif t115 == 1:
            t108 = t135
        elif t115 == 2:
            t109 = t135
        elif t115 == 3:
            t110 = t135
        elif t115 == 4:
            t111 = t135
        elif t115 == 5:
            t112 = t135
        elif t115 == 6:
            t113 = t135
        elif t115 == 7:
            t114 = t135
        t115 += 1
        t116 = t140
    else:
        t116 = t135
    t141 = t116 + t82
    t142 = t141 - t116
    t143 = t141 - t142
    t144 = t116 - t143
    t145 = t82 - t142
    t146 = t144 + t145
    if t146 != 0.0:
        if t115 == 0:
            t107 = t141
        elif t115 == 1:
            t108 = t141
        elif t115 == 2:
            t109 = t141
        elif t115 == 3:
            t110 = t141
        elif t115 == 4:
            t111 = t141
        elif t115 == 5:
            t112 = t141
        elif t115 == 6:
            t113 = t141
        elif t115 == 7:
            t114 = t141
        t115 += 1
        t116 = t146
    else:
        t116 = t141
    t147 = t116 + t76
    t148 = t147 - t116
    t149 = t147 - t148
    t150 = t116 - t149
    t151 = t76 - t148
    t152 = t150 + t151
    if t152 != 0.0:
        if t115 == 0:
            t107 = t147
        elif t115 == 1:
            t108 = t147
        elif t115 == 2:
            t109 = t147
        elif t115 == 3:
            t110 = t147
        elif t115 == 4:
            t111 = t147
        elif t115 == 5:
            t112 = t147
        elif t115 == 6:
            t113 = t147
        elif t115 == 7:
            t114 = t147
        t115 += 1
        t116 = t152
    else:
        t116 = t147
    t153 = t116 + t70
    t154 = t153 - t116
    t155 = t153 - t154
    t156 = t116 - t155
    t157 = t70 - t154
    t158 = t156 + t157
    if t158 != 0.0:
        if t115 == 0:
            t107 = t153
        elif t115 == 1:
            t108 = t153
        elif t115 == 2:
            t109 = t153
        elif t115 == 3:
            t110 = t153
        elif t115 == 4:
            t111 = t153
        elif t115 == 5:
            t112 = t153
        elif t115 == 6:
            t113 = t153
        elif t115 == 7:
            t114 = t153
        t115 += 1
        t116 = t158
    else:
        t116 = t153
    t159 = t116 + t64
    t160 = t159 - t116
    t161 = t159 - t160
    t162 = t116 - t161
    t163 = t64 - t160
    t164 = t162 + t163
    if t164 != 0.0:
        if t115 == 0:
            t107 = t159
        elif t115 == 1:
            t108 = t159
        elif t115 == 2:
            t109 = t159
        elif t115 == 3:
            t110 = t159
        elif t115 == 4:
            t111 = t159
        elif t115 == 5:
            t112 = t159
        elif t115 == 6:
            t113 = t159
        elif t115 == 7:
            t114 = t159
        t115 += 1
        t116 = t164
    else:
        t116 = t159
    t165 = t116 + t58
    t166 = t165 - t116
    t167 = t165 - t166
    t168 = t116 - t167
    t169 = t58 - t166
    t170 = t168 + t169
    if t170 != 0.0:
        if t115 == 0:
            t107 = t165
        elif t115 == 1:
            t108 = t165
        elif t115 == 2:
            t109 = t165
        elif t115 == 3:
            t110 = t165
        elif t115 == 4:
            t111 = t165
        elif t115 == 5:
            t112 = t165
        elif t115 == 6:
            t113 = t165
        elif t115 == 7:
            t114 = t165
        t115 += 1
        t116 = t170
    else:
        t116 = t165
    t171 = t116 + t52
    t172 = t171 - t116
    t173 = t171 - t172
    t174 = t116 - t173
    t175 = t52 - t172
    t176 = t174 + t175
    if t176 != 0.0:
        if t115 == 0:
            t107 = t171
        elif t115 == 1:
            t108 = t171
        elif t115 == 2:
            t109 = t171
        elif t115 == 3:
            t110 = t171
        elif t115 == 4:
            t111 = t171
        elif t115 == 5:
            t112 = t171
        elif t115 == 6:
            t113 = t171
        elif t115 == 7:
            t114 = t171
        t115 += 1
        t116 = t176
    else:
        t116 = t171
    t177 = t116 + t46
    t178 = t177 - t116
    t179 = t177 - t178
    t180 = t116 - t179
    t181 = t46 - t178
    t182 = t180 + t181
    if t182 != 0.0:
        if t115 == 0:
            t107 = t177
        elif t115 == 1:
            t108 = t177
        elif t115 == 2:
            t109 = t177
        elif t115 == 3:
            t110 = t177
        elif t115 == 4:
            t111 = t177
        elif t115 == 5:
            t112 = t177
        elif t115 == 6:
            t113 = t177
        elif t115 == 7:
            t114 = t177
        t115 += 1
        t116 = t182
    else:
        t116 = t177
    t183 = t116 + t40
    t184 = t183 - t116
    t185 = t183 - t184
    t186 = t116 - t185
    t187 = t40 - t184
    t188 = t186 + t187
    if t188 != 0.0:
        if t115 == 0:
            t107 = t183
        elif t115 == 1:
            t108 = t183
        elif t115 == 2:
            t109 = t183
        elif t115 == 3:
            t110 = t183
        elif t115 == 4:
            t111 = t183
        elif t115 == 5:
            t112 = t183
        elif t115 == 6:
            t113 = t183
        elif t115 == 7:
            t114 = t183
        t115 += 1
        t116 = t188
    else:
        t116 = t183
    t189 = t116 + t34
    t190 = t189 - t116
    t191 = t189 - t190
    t192 = t116 - t191
    t193 = t34 - t190
    t194 = t192 + t193
    if t194 != 0.0:
        if t115 == 0:
            t107 = t189
        elif t115 == 1:
            t108 = t189
        elif t115 == 2:
            t109 = t189
        elif t115 == 3:
            t110 = t189
        elif t115 == 4:
            t111 = t189
        elif t115 == 5:
            t112 = t189
        elif t115 == 6:
            t113 = t189
        elif t115 == 7:
            t114 = t189
        t115 += 1
        t116 = t194
    else:
        t116 = t189
    t195 = t116 + t28
    t196 = t195 - t116
    t197 = t195 - t196
    t198 = t116 - t197
    t199 = t28 - t196
    t200 = t198 + t199
    if t200 != 0.0:
        if t115 == 0:
            t107 = t195
        elif t115 == 1:
            t108 = t195
        elif t115 == 2:
            t109 = t195
        elif t115 == 3:
            t110 = t195
        elif t115 == 4:
            t111 = t195
        elif t115 == 5:
            t112 = t195
        elif t115 == 6:
            t113 = t195
        elif t115 == 7:
            t114 = t195
        t115 += 1
        t116 = t200
    else:
        t116 = t195
    t201 = t116 + t22
    t202 = t201 - t116
    t203 = t201 - t202
    t204 = t116 - t203
    t205 = t22 - t202
    t206 = t204 + t205
    if t206 != 0.0:
        if t115 == 0:
            t107 = t201
        elif t115 == 1:
            t108 = t201
        elif t115 == 2:
            t109 = t201
        elif t115 == 3:
            t110 = t201
        elif t115 == 4:
            t111 = t201
        elif t115 == 5:
            t112 = t201
        elif t115 == 6:
            t113 = t201
        elif t115 == 7:
            t114 = t201
        t115 += 1
        t116 = t206
    else:
        t116 = t201
    if t115 == 0:
        t107 = t116
    elif t115 == 1:
        t108 = t116
    elif t115 == 2:
        t109 = t116
    elif t115 == 3:
        t110 = t116
    elif t115 == 4:
        t111 = t116
    elif t115 == 5:
        t112 = t116
    elif t115 == 6:
        t113 = t116
    elif t115 == 7:
        t114 = t116
    t207 = t107 + t108
    t208 = t207 - t107
    t209 = t108 - t208
    t210 = t209 + t109
    t211 = t210 - t209
    t212 = t109 - t211
    t213 = t212 + t110
    t214 = t213 - t212
    t215 = t110 - t214
    t216 = t215 + t111
    t217 = t216 - t215
    t218 = t111 - t217
    t219 = t218 + t112
    t220 = t219 - t218
    t221 = t112 - t220
    t222 = t221 + t113
    t223 = t222 - t221
    t224 = t113 - t223
    t225 = t224 + t114
    t226 = t225 - t224
    t227 = t114 - t226
    return (t207, t210, t213, t216, t219, t222, t225, t227,)


def sub(a0, a1, a2, a3, a4, a5, a6, a7, b0, b1, b2, b3, b4, b5, b6, b7):
    t1 = -b0
    t2 = -b1
    t3 = -b2
    t4 = -b3
    t5 = -b4
    t6 = -b5
    t7 = -b6
    t8 = -b7
    t9 = a0
    t10 = a1
    t11 = a2
    t12 = a3
    t13 = a4
    t14 = a5
    t15 = a6
    t16 = a7
    t17 = t1
    t18 = t2
    t19 = t3
    t20 = t4
    t21 = t5
    t22 = t6
    t23 = t7
    t24 = t8
    if abs(t9) < abs(t17):
        t9, t17 = t17, t9
    if abs(t13) < abs(t21):
        t13, t21 = t21, t13
    if abs(t13) < abs(t17):
        t13, t17 = t17, t13
    if abs(t11) < abs(t19):
        t11, t19 = t19, t11
    if abs(t15) < abs(t23):
        t15, t23 = t23, t15
    if abs(t15) < abs(t19):
        t15, t19 = t19, t15
    if abs(t11) < abs(t13):
        t11, t13 = t13, t11
    if abs(t15) < abs(t17):
        t15, t17 = t17, t15
    if abs(t19) < abs(t21):
        t19, t21 = t21, t19
    if abs(t10) < abs(t18):
        t10, t18 = t18, t10
    if abs(t14) < abs(t22):
        t14, t22 = t22, t14
    if abs(t14) < abs(t18):
        t14, t18 = t18, t14
    if abs(t12) < abs(t20):
        t12, t20 = t20, t12
    if abs(t16) < abs(t24):
        t16, t24 = t24, t16
    if abs(t16) < abs(t20):
        t16, t20 = t20, t16
    if abs(t12) < abs(t14):
        t12, t14 = t14, t12
    if abs(t16) < abs(t18):
        t16, t18 = t18, t16
    if abs(t20) < abs(t22):
        t20, t22 = t22, t20
    if abs(t10) < abs(t11):
        t10, t11 = t11, t10
    if abs(t12) < abs(t13):
        t12, t13 = t13, t12
    if abs(t14) < abs(t15):
        t14, t15 = t15, t14
    if abs(t16) < abs(t17):
        t16, t17 = t17, t16
    if abs(t18) < abs(t19):
        t18, t19 = t19, t18
    if abs(t20) < abs(t21):
        t20, t21 = t21, t20
    if abs(t22) < abs(t23):
        t22, t23 = t23, t22
    t25 = t23 + t24
    t26 = t25 - t23
    t27 = t25 - t26
    t28 = t23 - t27
    t29 = t24 - t26
    t30 = t28 + t29
    t31 = t22 + t25
    t32 = t31 - t22
    t33 = t31 - t32
    t34 = t22 - t33
    t35 = t25 - t32
    t36 = t34 + t35
    t37 = t21 + t31
    t38 = t37 - t21
    t39 = t37 - t38
    t40 = t21 - t39
    t41 = t31 - t38
    t42 = t40 + t41
    t43 = t20 + t37
    t44 = t43 - t20
    t45 = t43 - t44
    t46 = t20 - t45
    t47 = t37 - t44
    t48 = t46 + t47
    t49 = t19 + t43
    t50 = t49 - t19
    t51 = t49 - t50
    t52 = t19 - t51
    t53 = t43 - t50
    t54 = t52 + t53
    t55 = t18 + t49
    t56 = t55 - t18
    t57 = t55 - t56
    t58 = t18 - t57
    t59 = t49 - t56
    t60 = t58 + t59
    t61 = t17 + t55
    t62 = t61 - t17
    t63 = t61 - t62
    t64 = t17 - t63
    t65 = t55 - t62
    t66 = t64 + t65
    t67 = t16 + t61
    t68 = t67 - t16
    t69 = t67 - t68
    t70 = t16 - t69
    t71 = t61 - t68
    t72 = t70 + t71
    t73 = t15 + t67
    t74 = t73 - t15
    t75 = t73 - t74
    t76 = t15 - t75
    t77 = t67 - t74
    t78 = t76 + t77
    t79 = t14 + t73
    t80 = t79 - t14
    t81 = t79 - t80
    t82 = t14 - t81
    t83 = t73 - t80
    t84 = t82 + t83
    t85 = t13 + t79
    t86 = t85 - t13
    t87 = t85 - t86
    t88 = t13 - t87
    t89 = t79 - t86
    t90 = t88 + t89
    t91 = t12 + t85
    t92 = t91 - t12
    t93 = t91 - t92
    t94 = t12 - t93
    t95 = t85 - t92
    t96 = t94 + t95
    t97 = t11 + t91
    t98 = t97 - t11
    t99 = t97 - t98
    t100 = t11 - t99
    t101 = t91 - t98
    t102 = t100 + t101
    t103 = t10 + t97
    t104 = t103 - t10
    t105 = t103 - t104
    t106 = t10 - t105
    t107 = t97 - t104
    t108 = t106 + t107
    t109 = t9 + t103
    t110 = t109 - t9
    t111 = t109 - t110
    t112 = t9 - t111
    t113 = t103 - t110
    t114 = t112 + t113
    t115 = 0.0
    t116 = 0.0
    t117 = 0.0
    t118 = 0.0
    t119 = 0.0
    t120 = 0.0
    t121 = 0.0
    t122 = 0.0
    t123 = 0
    t124 = t109
    t125 = t124 + t114
    t126 = t125 - t124
    t127 = t125 - t126
    t128 = t124 - t127
    t129 = t114 - t126
    t130 = t128 + t129
    if t130 != 0.0:
        if t123 == 0:
            t115 = t125
        elif t123 == 1:
            t116 = t125
        elif t123 == 2:
            t117 = t125
        elif t123 == 3:
            t118 = t125
        elif t123 == 4:
            t119 = t125
        elif t123 == 5:
            t120 = t125
        elif t123 == 6:
            t121 = t125
        elif t123 == 7:
            t122 = t125
        t123 += 1
        t124 = t130
    else:
        t124 = t125
    t131 = t124 + t108
    t132 = t131 - t124
    t133 = t131 - t132
    t134 = t124 - t133
    t135 = t108 - t132
    t136 = t134 + t135
    if t136 != 0.0:
        if t123 == 0:
            t115 = t131
        elif t123 == 1:
            t116 = t131
        elif t123 == 2:
            t117 = t131
        elif t123 == 3:
            t118 = t131
        elif t123 == 4:
            t119 = t131
        elif t123 == 5:
            t120 = t131
        elif t123 == 6:
            t121 = t131
        elif t123 == 7:
            t122 = t131
        t123 += 1
        t124 = t136
    else:
        t124 = t131
    t137 = t124 + t102
    t138 = t137 - t124
    t139 = t137 - t138
    t140 = t124 - t139
    t141 = t102 - t138
    t142 = t140 + t141
    if t142 != 0.0:
        if t123 == 0:
            t115 = t137
        elif t123 == 1:
            t116 = t137
        elif t123 == 2:
            t117 = t137
        elif t123 == 3:
            t118 = t137
        elif t123 == 4:
            t119 = t137
        elif t123 == 5:
            t120 = t137
        elif t123 == 6:
            t121 = t137
        elif t123 == 7:
            t122 = t137
        t123 += 1
        t124 = t142
    else:
        t124 = t137
    t143 = t124 + t96
    t144 = t143 - t124
    t145 = t143 - t144
    t146 = t124 - t145
    t147 = t96 - t144
    t148 = t146 + t147
    if t148 != 0.0:
        if t123 == 0:
            t115 = t143
        elif t123 == 1:
            t116 = t143
        elif t123 == 2:
            t117 = t143
        elif t123 == 3:
            t118 = t143
        elif t123 == 4:
            t119 = t143
        elif t123 == 5:
            t120 = t143
        elif t123 == 6:
            t121 = t143
        elif t123 == 7:
            t122 = t143
        t123 += 1
        t124 = t148
    else:
        t124 = t143
    t149 = t124 + t90
    t150 = t149 - t124
    t151 = t149 - t150
    t152 = t124 - t151
    t153 = t90 - t150
    t154 = t152 + t153
    if t154 != 0.0:
        if t123 == 0:
            t115 = t149
        elif t123 == 1:
            t116 = t149
        elif t123 == 2:
            t117 = t149
        elif t123 == 3:
            t118 = t149
        elif t123 == 4:
            t119 = t149
        elif t123 == 5:
            t120 = t149
        elif t123 == 6:
            t121 = t149
        elif t123 == 7:
            t122 = t149
        t123 += 1
        t124 = t154
    else:
        t124 = t149
    t155 = t124 + t84
    t156 = t155 - t124
    t157 = t155 - t156
    t158 = t124 - t157
    t159 = t84 - t156
    t160 = t158 + t159
    if t160 != 0.0:
        if t123 == 0:
            t115 = t155
        elif t123 == 1:
            t116 = t155
        elif t123 == 2:
            t117 = t155
        elif t123 == 3:
            t118 = t155
        elif t123 == 4:
            t119 = t155
        elif t123 == 5:
            t120 = t155
        elif t123 == 6:
            t121 = t155
        elif t123 == 7:
            t122 = t155
        t123 += 1
        t124 = t160
    else:
        t124 = t155
    t161 = t124 + t78
    t162 = t161 - t124
    t163 = t161 - t162
    t164 = t124 - t163
    t165 = t78 - t162
    t166 = t164 + t165
    if t166 != 0.0:
        if t123 == 0:
            t115 = t161
        elif t123 == 1:
            t116 = t161
        elif t123 == 2:
            t117 = t161
        elif t123 == 3:
            t118 = t161
        elif t123 == 4:
            t119 = t161
        elif t123 == 5:
            t120 = t161
        elif t123 == 6:
            t121 = t161
        elif t123 == 7:
            t122 = t161
        t123 += 1
        t124 = t166
    else:
        t124 = t161
    t167 = t124 + t72
    t168 = t167 - t124
    t169 = t167 - t168
    t170 = t124 - t169
    t171 = t72 - t168
    t172 = t170 + t171
    if t172 != 0.0:
        if t123 == 0:
            t115 = t167
        elif t123 == 1:
            t116 = t167
        elif t123 == 2:
            t117 = t167
        elif t123 == 3:
            t118 = t167
        elif t123 == 4:
            t119 = t167
        elif t123 == 5:
            t120 = t167
        elif t123 == 6:
            t121 = t167
        elif t123 == 7:
            t122 = t167
        t123 += 1
        t124 = t172
    else:
        t124 = t167
    t173 = t124 + t66
    t174 = t173 - t124
    t175 = t173 - t174
    t176 = t124 - t175
    t177 = t66 - t174
    t178 = t176 + t177
    if t178 != 0.0:
        if t123 == 0:
            t115 = t173
        elif t123 == 1:
            t116 = t173
        elif t123 == 2:
            t117 = t173
        elif t123 == 3:
            t118 = t173
        elif t123 == 4:
            t119 = t173
        elif t123 == 5:
            t120 = t173
        elif t123 == 6:
            t121 = t173
        elif t123 == 7:
            t122 = t173
        t123 += 1
        t124 = t178
    else:
        t124 = t173
    t179 = t124 + t60
    t180 = t179 - t124
    t181 = t179 - t180
    t182 = t124 - t181
    t183 = t60 - t180
    t184 = t182 + t183
    if t184 != 0.0:
        if t123 == 0:
            t115 = t179
        elif t123 == 1:
            t116 = t179
        elif t123 == 2:
            t117 = t179
        elif t123 == 3:
            t118 = t179
        elif t123 == 4:
            t119 = t179
        elif t123 == 5:
            t120 = t179
        elif t123 == 6:
            t121 = t179
        elif t123 == 7:
            t122 = t179
        t123 += 1
        t124 = t184
    else:
        t124 = t179
    t185 = t124 + t54
    t186 = t185 - t124
    t187 = t185 - t186
    t188 = t124 - t187
    t189 = t54 - t186
    t190 = t188 + t189
    if t190 != 0.0:
        if t123 == 0:
            t115 = t185
        elif t123 == 1:
            t116 = t185
        elif t123 == 2:
            t117 = t185
        elif t123 == 3:
            t118 = t185
        elif t123 == 4:
            t119 = t185
        elif t123 == 5:
            t120 = t185
        elif t123 == 6:
            t121 = t185
        elif t123 == 7:
            t122 = t185
        t123 += 1
        t124 = t190
    else:
        t124 = t185
    t191 = t124 + t48
    t192 = t191 - t124
    t193 = t191 - t192
    t194 = t124 - t193
    t195 = t48 - t192
    t196 = t194 + t195
    if t196 != 0.0:
        if t123 == 0:
            t115 = t191
        elif t123 == 1:
            t116 = t191
        elif t123 == 2:
            t117 = t191
        elif t123 == 3:
            t118 = t191
        elif t123 == 4:
            t119 = t191
        elif t123 == 5:
            t120 = t191
        elif t123 == 6:
            t121 = t191
        elif t123 == 7:
            t122 = t191
        t123 += 1
        t124 = t196
    else:
        t124 = t191
    t197 = t124 + t42
    t198 = t197 - t124
    t199 = t197 - t198
    t200 = t124 - t199
    t201 = t42 - t198
    t202 = t200 + t201
    if t202 != 0.0:
        if t123 == 0:
            t115 = t197
        elif t123 == 1:
            t116 = t197
        elif t123 == 2:
            t117 = t197
        elif t123 == 3:
            t118 = t197
        elif t123 == 4:
            t119 = t197
        elif t123 == 5:
            t120 = t197
        elif t123 == 6:
            t121 = t197
        elif t123 == 7:
            t122 = t197
        t123 += 1
        t124 = t202
    else:
        t124 = t197
    t203 = t124 + t36
    t204 = t203 - t124
    t205 = t203 - t204
    t206 = t124 - t205
    t207 = t36 - t204
    t208 = t206 + t207
    if t208 != 0.0:
        if t123 == 0:
            t115 = t203
        elif t123 == 1:
            t116 = t203
        elif t123 == 2:
            t117 = t203
        elif t123 == 3:
            t118 = t203
        elif t123 == 4:
            t119 = t203
        elif t123 == 5:
            t120 = t203
        elif t123 == 6:
            t121 = t203
        elif t123 == 7:
            t122 = t203
        t123 += 1
        t124 = t208
    else:
        t124 = t203
    t209 = t124 + t30
    t210 = t209 - t124
    t211 = t209 - t210
    t212 = t124 - t211
    t213 = t30 - t210
    t214 = t212 + t213
    if t214 != 0.0:
        if t123 == 0:
            t115 = t209
        elif t123 == 1:
            t116 = t209
        elif t123 == 2:
            t117 = t209
        elif t123 == 3:
            t118 = t209
        elif t123 == 4:
            t119 = t209
        elif t123 == 5:
            t120 = t209
        elif t123 == 6:
            t121 = t209
        elif t123 == 7:
            t122 = t209
        t123 += 1
        t124 = t214
    else:
        t124 = t209
    if t123 == 0:
        t115 = t124
    elif t123 == 1:
        t116 = t124
    elif t123 == 2:
        t117 = t124
    elif t123 == 3:
        t118 = t124
    elif t123 == 4:
        t119 = t124
    elif t123 == 5:
        t120 = t124
    elif t123 == 6:
        t121 = t124
    elif t123 == 7:
        t122 = t124
    t215 = t115 + t116
    t216 = t215 - t115
    t217 = t116 - t216
    t218 = t217 + t117
    t219 = t218 - t217
    t220 = t117 - t219
    t221 = t220 + t118
    t222 = t221 - t220
    t223 = t118 - t222
    t224 = t223 + t119
    t225 = t224 - t223
    t226 = t119 - t225
    t227 = t226 + t120
    t228 = t227 - t226
    t229 = t120 - t228
    t230 = t229 + t121
    t231 = t230 - t229
    t232 = t121 - t231
    t233 = t232 + t122
    t234 = t233 - t232
    t235 = t122 - t234
    return (t215, t218, t221, t224, t227, t230, t233, t235,)


def mul(a0, a1, a2, a3, a4, a5, a6, a7, b0, b1, b2, b3, b4, b5, b6, b7):
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
    t17 = SPLITTER * a4
    t18 = t17 - a4
    t19 = t17 - t18
    t20 = a4 - t19
    t21 = SPLITTER * a5
    t22 = t21 - a5
    t23 = t21 - t22
    t24 = a5 - t23
    t25 = SPLITTER * a6
    t26 = t25 - a6
    t27 = t25 - t26
    t28 = a6 - t27
    t29 = SPLITTER * a7
    t30 = t29 - a7
    t31 = t29 - t30
    t32 = a7 - t31
    t33 = SPLITTER * b0
    t34 = t33 - b0
    t35 = t33 - t34
    t36 = b0 - t35
    t37 = SPLITTER * b1
    t38 = t37 - b1
    t39 = t37 - t38
    t40 = b1 - t39
    t41 = SPLITTER * b2
    t42 = t41 - b2
    t43 = t41 - t42
    t44 = b2 - t43
    t45 = SPLITTER * b3
    t46 = t45 - b3
    t47 = t45 - t46
    t48 = b3 - t47
    t49 = SPLITTER * b4
    t50 = t49 - b4
    t51 = t49 - t50
    t52 = b4 - t51
    t53 = SPLITTER * b5
    t54 = t53 - b5
    t55 = t53 - t54
    t56 = b5 - t55
    t57 = SPLITTER * b6
    t58 = t57 - b6
    t59 = t57 - t58
    t60 = b6 - t59
    t61 = SPLITTER * b7
    t62 = t61 - b7
    t63 = t61 - t62
    t64 = b7 - t63
    t65 = a0 * b0
    t66 = t3 * t35
    t67 = t66 - t65
    t68 = t3 * t36
    t69 = t67 + t68
    t70 = t4 * t35
    t71 = t69 + t70
    t72 = t4 * t36
    t73 = t71 + t72
    t74 = a0 * b1
    t75 = t3 * t39
    t76 = t75 - t74
    t77 = t3 * t40
    t78 = t76 + t77
    t79 = t4 * t39
    t80 = t78 + t79
    t81 = t4 * t40
    t82 = t80 + t81
    t83 = a1 * b0
    t84 = t7 * t35
    t85 = t84 - t83
    t86 = t7 * t36
    t87 = t85 + t86
    t88 = t8 * t35
    t89 = t87 + t88
    t90 = t8 * t36
    t91 = t89 + t90
    t92 = a0 * b2
    t93 = t3 * t43
    t94 = t93 - t92
    t95 = t3 * t44
    t96 = t94 + t95
    t97 = t4 * t43
    t98 = t96 + t97
    t99 = t4 * t44
    t100 = t98 + t99
    t101 = a1 * b1
    t102 = t7 * t39
    t103 = t102 - t101
    t104 = t7 * t40
    t105 = t103 + t104
    t106 = t8 * t39
    t107 = t105 + t106
    t108 = t8 * t40
    t109 = t107 + t108
    t110 = a2 * b0
    t111 = t11 * t35
    t112 = t111 - t110
    t113 = t11 * t36
    t114 = t112 + t113
    t115 = t12 * t35
    t116 = t114 + t115
    t117 = t12 * t36
    t118 = t116 + t117
    t119 = a0 * b3
    t120 = t3 * t47
    t121 = t120 - t119
    t122 = t3 * t48
    t123 = t121 + t122
    t124 = t4 * t47
    t125 = t123 + t124
    t126 = t4 * t48
    t127 = t125 + t126
    t128 = a1 * b2
    t129 = t7 * t43
    t130 = t129 - t128
    t131 = t7 * t44
    t132 = t130 + t131
    t133 = t8 * t43
    t134 = t132 + t133
    t135 = t8 * t44
    t136 = t134 + t135
    t137 = a2 * b1
    t138 = t11 * t39
    t139 = t138 - t137
    t140 = t11 * t40
    t141 = t139 + t140
    t142 = t12 * t39
    t143 = t141 + t142
    t144 = t12 * t40
    t145 = t143 + t144
    t146 = a3 * b0
    t147 = t15 * t35
    t148 = t147 - t146
    t149 = t15 * t36
    t150 = t148 + t149
    t151 = t16 * t35
    t152 = t150 + t151
    t153 = t16 * t36
    t154 = t152 + t153
    t155 = a0 * b4
    t156 = t3 * t51
    t157 = t156 - t155
    t158 = t3 * t52
    t159 = t157 + t158
    t160 = t4 * t51
    t161 = t159 + t160
    t162 = t4 * t52
    t163 = t161 + t162
    t164 = a1 * b3
    t165 = t7 * t47
    t166 = t165 - t164
    t167 = t7 * t48
    t168 = t166 + t167
    t169 = t8 * t47
    t170 = t168 + t169
    t171 = t8 * t48
    t172 = t170 + t171
    t173 = a2 * b2
    t174 = t11 * t43
    t175 = t174 - t173
    t176 = t11 * t44
    t177 = t175 + t176
    t178 = t12 * t43
    t179 = t177 + t178
    t180 = t12 * t44
    t181 = t179 + t180
    t182 = a3 * b1
    t183 = t15 * t39
    t184 = t183 - t182
    t185 = t15 * t40
    t186 = t184 + t185
    t187 = t16 * t39
    t188 = t186 + t187
    t189 = t16 * t40
    t190 = t188 + t189
    t191 = a4 * b0
    t192 = t19 * t35
    t193 = t192 - t191
    t194 = t19 * t36
    t195 = t193 + t194
    t196 = t20 * t35
    t197 = t195 + t196
    t198 = t20 * t36
    t199 = t197 + t198
    t200 = a0 * b5
    t201 = t3 * t55
    t202 = t201 - t200
    t203 = t3 * t56
    t204 = t202 + t203
    t205 = t4 * t55
    t206 = t204 + t205
    t207 = t4 * t56
    t208 = t206 + t207
    t209 = a1 * b4
    t210 = t7 * t51
    t211 = t210 - t209
    t212 = t7 * t52
    t213 = t211 + t212
    t214 = t8 * t51
    t215 = t213 + t214
    t216 = t8 * t52
    t217 = t215 + t216
    t218 = a2 * b3
    t219 = t11 * t47
    t220 = t219 - t218
    t221 = t11 * t48
    t222 = t220 + t221
    t223 = t12 * t47
    t224 = t222 + t223
    t225 = t12 * t48
    t226 = t224 + t225
    t227 = a3 * b2
    t228 = t15 * t43
    t229 = t228 - t227
    t230 = t15 * t44
    t231 = t229 + t230
    t232 = t16 * t43
    t233 = t231 + t232
    t234 = t16 * t44
    t235 = t233 + t234
    t236 = a4 * b1
    t237 = t19 * t39
    t238 = t237 - t236
    t239 = t19 * t40
    t240 = t238 + t239
    t241 = t20 * t39
    t242 = t240 + t241
    t243 = t20 * t40
    t244 = t242 + t243
    t245 = a5 * b0
    t246 = t23 * t35
    t247 = t246 - t245
    t248 = t23 * t36
    t249 = t247 + t248
    t250 = t24 * t35
    t251 = t249 + t250
    t252 = t24 * t36
    t253 = t251 + t252
    t254 = a0 * b6
    t255 = t3 * t59
    t256 = t255 - t254
    t257 = t3 * t60
    t258 = t256 + t257
    t259 = t4 * t59
    t260 = t258 + t259
    t261 = t4 * t60
    t262 = t260 + t261
    t263 = a1 * b5
    t264 = t7 * t55
    t265 = t264 - t263
    t266 = t7 * t56
    t267 = t265 + t266
    t268 = t8 * t55
    t269 = t267 + t268
    t270 = t8 * t56
    t271 = t269 + t270
    t272 = a2 * b4
    t273 = t11 * t51
    t274 = t273 - t272
    t275 = t11 * t52
    t276 = t274 + t275
    t277 = t12 * t51
    t278 = t276 + t277
    t279 = t12 * t52
    t280 = t278 + t279
    t281 = a3 * b3
    t282 = t15 * t47
    t283 = t282 - t281
    t284 = t15 * t48
    t285 = t283 + t284
    t286 = t16 * t47
    t287 = t285 + t286
    t288 = t16 * t48
    t289 = t287 + t288
    t290 = a4 * b2
    t291 = t19 * t43
    t292 = t291 - t290
    t293 = t19 * t44
    t294 = t292 + t293
    t295 = t20 * t43
    t296 = t294 + t295
    t297 = t20 * t44
    t298 = t296 + t297
    t299 = a5 * b1
    t300 = t23 * t39
    t301 = t300 - t299
    t302 = t23 * t40
    t303 = t301 + t302
    t304 = t24 * t39
    t305 = t303 + t304
    t306 = t24 * t40
    t307 = t305 + t306
    t308 = a6 * b0
    t309 = t27 * t35
    t310 = t309 - t308
    t311 = t27 * t36
    t312 = t310 + t311
    t313 = t28 * t35
    t314 = t312 + t313
    t315 = t28 * t36
    t316 = t314 + t315
    t317 = a0 * b7
    t318 = t3 * t63
    t319 = t318 - t317
    t320 = t3 * t64
    t321 = t319 + t320
    t322 = t4 * t63
    t323 = t321 + t322
    t324 = t4 * t64
    t325 = t323 + t324
    t326 = a1 * b6
    t327 = t7 * t59
    t328 = t327 - t326
    t329 = t7 * t60
    t330 = t328 + t329
    t331 = t8 * t59
    t332 = t330 + t331
    t333 = t8 * t60
    t334 = t332 + t333
    t335 = a2 * b5
    t336 = t11 * t55
    t337 = t336 - t335
    t338 = t11 * t56
    t339 = t337 + t338
    t340 = t12 * t55
    t341 = t339 + t340
    t342 = t12 * t56
    t343 = t341 + t342
    t344 = a3 * b4
    t345 = t15 * t51
    t346 = t345 - t344
    t347 = t15 * t52
    t348 = t346 + t347
    t349 = t16 * t51
    t350 = t348 + t349
    t351 = t16 * t52
    t352 = t350 + t351
    t353 = a4 * b3
    t354 = t19 * t47
    t355 = t354 - t353
    t356 = t19 * t48
    t357 = t355 + t356
    t358 = t20 * t47
    t359 = t357 + t358
    t360 = t20 * t48
    t361 = t359 + t360
    t362 = a5 * b2
    t363 = t23 * t43
    t364 = t363 - t362
    t365 = t23 * t44
    t366 = t364 + t365
    t367 = t24 * t43
    t368 = t366 + t367
    t369 = t24 * t44
    t370 = t368 + t369
    t371 = a6 * b1
    t372 = t27 * t39
    t373 = t372 - t371
    t374 = t27 * t40
    t375 = t373 + t374
    t376 = t28 * t39
    t377 = t375 + t376
    t378 = t28 * t40
    t379 = t377 + t378
    t380 = a7 * b0
    t381 = t31 * t35
    t382 = t381 - t380
    t383 = t31 * t36
    t384 = t382 + t383
    t385 = t32 * t35
    t386 = t384 + t385
    t387 = t32 * t36
    t388 = t386 + t387
    t389 = a1 * b7
    t390 = a2 * b6
    t391 = a3 * b5
    t392 = a4 * b4
    t393 = a5 * b3
    t394 = a6 * b2
    t395 = a7 * b1
    t396 = t73 + t74
    t397 = t396 - t73
    t398 = t396 - t397
    t399 = t73 - t398
    t400 = t74 - t397
    t401 = t399 + t400
    t402 = t396 + t83
    t403 = t402 - t396
    t404 = t402 - t403
    t405 = t396 - t404
    t406 = t83 - t403
    t407 = t405 + t406
    t408 = t82 + t91
    t409 = t408 - t82
    t410 = t408 - t409
    t411 = t82 - t410
    t412 = t91 - t409
    t413 = t411 + t412
    t414 = t408 + t92
    t415 = t414 - t408
    t416 = t414 - t415
    t417 = t408 - t416
    t418 = t92 - t415
    t419 = t417 + t418
    t420 = t414 + t101
    t421 = t420 - t414
    t422 = t420 - t421
    t423 = t414 - t422
    t424 = t101 - t421
    t425 = t423 + t424
    t426 = t420 + t110
    t427 = t426 - t420
    t428 = t426 - t427
    t429 = t420 - t428
    t430 = t110 - t427
    t431 = t429 + t430
    t432 = t426 + t401
    t433 = t432 - t426
    t434 = t432 - t433
    t435 = t426 - t434
    t436 = t401 - t433
    t437 = t435 + t436
    t438 = t432 + t407
    t439 = t438 - t432
    t440 = t438 - t439
    t441 = t432 - t440
    t442 = t407 - t439
    t443 = t441 + t442
    t444 = t100 + t109
    t445 = t444 - t100
    t446 = t444 - t445
    t447 = t100 - t446
    t448 = t109 - t445
    t449 = t447 + t448
    t450 = t444 + t118
    t451 = t450 - t444
    t452 = t450 - t451
    t453 = t444 - t452
    t454 = t118 - t451
    t455 = t453 + t454
    t456 = t450 + t119
    t457 = t456 - t450
    t458 = t456 - t457
    t459 = t450 - t458
    t460 = t119 - t457
    t461 = t459 + t460
    t462 = t456 + t128
    t463 = t462 - t456
    t464 = t462 - t463
    t465 = t456 - t464
    t466 = t128 - t463
    t467 = t465 + t466
    t468 = t462 + t137
    t469 = t468 - t462
    t470 = t468 - t469
    t471 = t462 - t470
    t472 = t137 - t469
    t473 = t471 + t472
    t474 = t468 + t146
    t475 = t474 - t468
    t476 = t474 - t475
    t477 = t468 - t476
    t478 = t146 - t475
    t479 = t477 + t478
    t480 = t474 + t413
    t481 = t480 - t474
    t482 = t480 - t481
    t483 = t474 - t482
    t484 = t413 - t481
    t485 = t483 + t484
    t486 = t480 + t419
    t487 = t486 - t480
    t488 = t486 - t487
    t489 = t480 - t488
    t490 = t419 - t487
    t491 = t489 + t490
    t492 = t486 + t425
    t493 = t492 - t486
    t494 = t492 - t493
    t495 = t486 - t494
    t496 = t425 - t493
    t497 = t495 + t496
    t498 = t492 + t431
    t499 = t498 - t492
    t500 = t498 - t499
    t501 = t492 - t500
    t502 = t431 - t499
    t503 = t501 + t502
    t504 = t498 + t437
    t505 = t504 - t498
    t506 = t504 - t505
    t507 = t498 - t506
    t508 = t437 - t505
    t509 = t507 + t508
    t510 = t504 + t443
    t511 = t510 - t504
    t512 = t510 - t511
    t513 = t504 - t512
    t514 = t443 - t511
    t515 = t513 + t514
    t516 = t127 + t136
    t517 = t516 - t127
    t518 = t516 - t517
    t519 = t127 - t518
    t520 = t136 - t517
    t521 = t519 + t520
    t522 = t516 + t145
    t523 = t522 - t516
    t524 = t522 - t523
    t525 = t516 - t524
    t526 = t145 - t523
    t527 = t525 + t526
    t528 = t522 + t154
    t529 = t528 - t522
    t530 = t528 - t529
    t531 = t522 - t530
    t532 = t154 - t529
    t533 = t531 + t532
    t534 = t528 + t155
    t535 = t534 - t528
    t536 = t534 - t535
    t537 = t528 - t536
    t538 = t155 - t535
    t539 = t537 + t538
    t540 = t534 + t164
    t541 = t540 - t534
    t542 = t540 - t541
    t543 = t534 - t542
    t544 = t164 - t541
    t545 = t543 + t544
    t546 = t540 + t173
    t547 = t546 - t540
    t548 = t546 - t547
    t549 = t540 - t548
    t550 = t173 - t547
    t551 = t549 + t550
    t552 = t546 + t182
    t553 = t552 - t546
    t554 = t552 - t553
    t555 = t546 - t554
    t556 = t182 - t553
    t557 = t555 + t556
    t558 = t552 + t191
    t559 = t558 - t552
    t560 = t558 - t559
    t561 = t552 - t560
    t562 = t191 - t559
    t563 = t561 + t562
    t564 = t558 + t449
    t565 = t564 - t558
    t566 = t564 - t565
    t567 = t558 - t566
    t568 = t449 - t565
    t569 = t567 + t568
    t570 = t564 + t455
    t571 = t570 - t564
    t572 = t570 - t571
    t573 = t564 - t572
    t574 = t455 - t571
    t575 = t573 + t574
    t576 = t570 + t461
    t577 = t576 - t570
    t578 = t576 - t577
    t579 = t570 - t578
    t580 = t461 - t577
    t581 = t579 + t580
    t582 = t576 + t467
    t583 = t582 - t576
    t584 = t582 - t583
    t585 = t576 - t584
    t586 = t467 - t583
    t587 = t585 + t586
    t588 = t582 + t473
    t589 = t588 - t582
    t590 = t588 - t589
    t591 = t582 - t590
    t592 = t473 - t589
    t593 = t591 + t592
    t594 = t588 + t479
    t595 = t594 - t588
    t596 = t594 - t595
    t597 = t588 - t596
    t598 = t479 - t595
    t599 = t597 + t598
    t600 = t594 + t485
    t601 = t600 - t594
    t602 = t600 - t601
    t603 = t594 - t602
    t604 = t485 - t601
    t605 = t603 + t604
    t606 = t600 + t491
    t607 = t606 - t600
    t608 = t606 - t607
    t609 = t600 - t608
    t610 = t491 - t607
    t611 = t609 + t610
    t612 = t606 + t497
    t613 = t612 - t606
    t614 = t612 - t613
    t615 = t606 - t614
    t616 = t497 - t613
    t617 = t615 + t616
    t618 = t612 + t503
    t619 = t618 - t612
    t620 = t618 - t619
    t621 = t612 - t620
    t622 = t503 - t619
    t623 = t621 + t622
    t624 = t618 + t509
    t625 = t624 - t618
    t626 = t624 - t625
    t627 = t618 - t626
    t628 = t509 - t625
    t629 = t627 + t628
    t630 = t624 + t515
    t631 = t630 - t624
    t632 = t630 - t631
    t633 = t624 - t632
    t634 = t515 - t631
    t635 = t633 + t634
    t636 = t163 + t172
    t637 = t636 - t163
    t638 = t636 - t637
    t639 = t163 - t638
    t640 = t172 - t637
    t641 = t639 + t640
    t642 = t636 + t181
    t643 = t642 - t636
    t644 = t642 - t643
    t645 = t636 - t644
    t646 = t181 - t643
    t647 = t645 + t646
    t648 = t642 + t190
    t649 = t648 - t642
    t650 = t648 - t649
    t651 = t642 - t650
    t652 = t190 - t649
    t653 = t651 + t652
    t654 = t648 + t199
    t655 = t654 - t648
    t656 = t654 - t655
    t657 = t648 - t656
    t658 = t199 - t655
    t659 = t657 + t658
    t660 = t654 + t200
    t661 = t660 - t654
    t662 = t660 - t661
    t663 = t654 - t662
    t664 = t200 - t661
    t665 = t663 + t664
    t666 = t660 + t209
    t667 = t666 - t660
    t668 = t666 - t667
    t669 = t660 - t668
    t670 = t209 - t667
    t671 = t669 + t670
    t672 = t666 + t218
    t673 = t672 - t666
    t674 = t672 - t673
    t675 = t666 - t674
    t676 = t218 - t673
    t677 = t675 + t676
    t678 = t672 + t227
    t679 = t678 - t672
    t680 = t678 - t679
    t681 = t672 - t680
    t682 = t227 - t679
    t683 = t681 + t682
    t684 = t678 + t236
    t685 = t684 - t678
    t686 = t684 - t685
    t687 = t678 - t686
    t688 = t236 - t685
    t689 = t687 + t688
    t690 = t684 + t245
    t691 = t690 - t684
    t692 = t690 - t691
    t693 = t684 - t692
    t694 = t245 - t691
    t695 = t693 + t694
    t696 = t690 + t521
    t697 = t696 - t690
    t698 = t696 - t697
    t699 = t690 - t698
    t700 = t521 - t697
    t701 = t699 + t700
    t702 = t696 + t527
    t703 = t702 - t696
    t704 = t702 - t703
    t705 = t696 - t704
    t706 = t527 - t703
    t707 = t705 + t706
    t708 = t702 + t533
    t709 = t708 - t702
    t710 = t708 - t709
    t711 = t702 - t710
    t712 = t533 - t709
    t713 = t711 + t712
    t714 = t708 + t539
    t715 = t714 - t708
    t716 = t714 - t715
    t717 = t708 - t716
    t718 = t539 - t715
    t719 = t717 + t718
    t720 = t714 + t545
    t721 = t720 - t714
    t722 = t720 - t721
    t723 = t714 - t722
    t724 = t545 - t721
    t725 = t723 + t724
    t726 = t720 + t551
    t727 = t726 - t720
    t728 = t726 - t727
    t729 = t720 - t728
    t730 = t551 - t727
    t731 = t729 + t730
    t732 = t726 + t557
    t733 = t732 - t726
    t734 = t732 - t733
    t735 = t726 - t734
    t736 = t557 - t733
    t737 = t735 + t736
    t738 = t732 + t563
    t739 = t738 - t732
    t740 = t738 - t739
    t741 = t732 - t740
    t742 = t563 - t739
    t743 = t741 + t742
    t744 = t738 + t569
    t745 = t744 - t738
    t746 = t744 - t745
    t747 = t738 - t746
    t748 = t569 - t745
    t749 = t747 + t748
    t750 = t744 + t575
    t751 = t750 - t744
    t752 = t750 - t751
    t753 = t744 - t752
    t754 = t575 - t751
    t755 = t753 + t754
    t756 = t750 + t581
    t757 = t756 - t750
    t758 = t756 - t757
    t759 = t750 - t758
    t760 = t581 - t757
    t761 = t759 + t760
    t762 = t756 + t587
    t763 = t762 - t756
    t764 = t762 - t763
    t765 = t756 - t764
    t766 = t587 - t763
    t767 = t765 + t766
    t768 = t762 + t593
    t769 = t768 - t762
    t770 = t768 - t769
    t771 = t762 - t770
    t772 = t593 - t769
    t773 = t771 + t772
    t774 = t768 + t599
    t775 = t774 - t768
    t776 = t774 - t775
    t777 = t768 - t776
    t778 = t599 - t775
    t779 = t777 + t778
    t780 = t774 + t605
    t781 = t780 - t774
    t782 = t780 - t781
    t783 = t774 - t782
    t784 = t605 - t781
    t785 = t783 + t784
    t786 = t780 + t611
    t787 = t786 - t780
    t788 = t786 - t787
    t789 = t780 - t788
    t790 = t611 - t787
    t791 = t789 + t790
    t792 = t786 + t617
    t793 = t792 - t786
    t794 = t792 - t793
    t795 = t786 - t794
    t796 = t617 - t793
    t797 = t795 + t796
    t798 = t792 + t623
    t799 = t798 - t792
    t800 = t798 - t799
    t801 = t792 - t800
    t802 = t623 - t799
    t803 = t801 + t802
    t804 = t798 + t629
    t805 = t804 - t798
    t806 = t804 - t805
    t807 = t798 - t806
    t808 = t629 - t805
    t809 = t807 + t808
    t810 = t804 + t635
    t811 = t810 - t804
    t812 = t810 - t811
    t813 = t804 - t812
    t814 = t635 - t811
    t815 = t813 + t814
    t816 = t208 + t217
    t817 = t816 - t208
    t818 = t816 - t817
    t819 = t208 - t818
    t820 = t217 - t817
    t821 = t819 + t820
    t822 = t816 + t226
    t823 = t822 - t816
    t824 = t822 - t823
    t825 = t816 - t824
    t826 = t226 - t823
    t827 = t825 + t826
    t828 = t822 + t235
    t829 = t828 - t822
    t830 = t828 - t829
    t831 = t822 - t830
    t832 = t235 - t829
    t833 = t831 + t832
    t834 = t828 + t244
    t835 = t834 - t828
    t836 = t834 - t835
    t837 = t828 - t836
    t838 = t244 - t835
    t839 = t837 + t838
    t840 = t834 + t253
    t841 = t840 - t834
    t842 = t840 - t841
    t843 = t834 - t842
    t844 = t253 - t841
    t845 = t843 + t844
    t846 = t840 + t254
    t847 = t846 - t840
    t848 = t846 - t847
    t849 = t840 - t848
    t850 = t254 - t847
    t851 = t849 + t850
    t852 = t846 + t263
    t853 = t852 - t846
    t854 = t852 - t853
    t855 = t846 - t854
    t856 = t263 - t853
    t857 = t855 + t856
    t858 = t852 + t272
    t859 = t858 - t852
    t860 = t858 - t859
    t861 = t852 - t860
    t862 = t272 - t859
    t863 = t861 + t862
    t864 = t858 + t281
    t865 = t864 - t858
    t866 = t864 - t865
    t867 = t858 - t866
    t868 = t281 - t865
    t869 = t867 + t868
    t870 = t864 + t290
    t871 = t870 - t864
    t872 = t870 - t871
    t873 = t864 - t872
    t874 = t290 - t871
    t875 = t873 + t874
    t876 = t870 + t299
    t877 = t876 - t870
    t878 = t876 - t877
    t879 = t870 - t878
    t880 = t299 - t877
    t881 = t879 + t880
    t882 = t876 + t308
    t883 = t882 - t876
    t884 = t882 - t883
    t885 = t876 - t884
    t886 = t308 - t883
    t887 = t885 + t886
    t888 = t882 + t641
    t889 = t888 - t882
    t890 = t888 - t889
    t891 = t882 - t890
    t892 = t641 - t889
    t893 = t891 + t892
    t894 = t888 + t647
    t895 = t894 - t888
    t896 = t894 - t895
    t897 = t888 - t896
    t898 = t647 - t895
    t899 = t897 + t898
    t900 = t894 + t653
    t901 = t900 - t894
    t902 = t900 - t901
    t903 = t894 - t902
    t904 = t653 - t901
    t905 = t903 + t904
    t906 = t900 + t659
    t907 = t906 - t900
    t908 = t906 - t907
    t909 = t900 - t908
    t910 = t659 - t907
    t911 = t909 + t910
    t912 = t906 + t665
    t913 = t912 - t906
    t914 = t912 - t913
    t915 = t906 - t914
    t916 = t665 - t913
    t917 = t915 + t916
    t918 = t912 + t671
    t919 = t918 - t912
    t920 = t918 - t919
    t921 = t912 - t920
    t922 = t671 - t919
    t923 = t921 + t922
    t924 = t918 + t677
    t925 = t924 - t918
    t926 = t924 - t925
    t927 = t918 - t926
    t928 = t677 - t925
    t929 = t927 + t928
    t930 = t924 + t683
    t931 = t930 - t924
    t932 = t930 - t931
    t933 = t924 - t932
    t934 = t683 - t931
    t935 = t933 + t934
    t936 = t930 + t689
    t937 = t936 - t930
    t938 = t936 - t937
    t939 = t930 - t938
    t940 = t689 - t937
    t941 = t939 + t940
    t942 = t936 + t695
    t943 = t942 - t936
    t944 = t942 - t943
    t945 = t936 - t944
    t946 = t695 - t943
    t947 = t945 + t946
    t948 = t942 + t701
    t949 = t948 - t942
    t950 = t948 - t949
    t951 = t942 - t950
    t952 = t701 - t949
    t953 = t951 + t952
    t954 = t948 + t707
    t955 = t954 - t948
    t956 = t954 - t955
    t957 = t948 - t956
    t958 = t707 - t955
    t959 = t957 + t958
    t960 = t954 + t713
    t961 = t960 - t954
    t962 = t960 - t961
    t963 = t954 - t962
    t964 = t713 - t961
    t965 = t963 + t964
    t966 = t960 + t719
    t967 = t966 - t960
    t968 = t966 - t967
    t969 = t960 - t968
    t970 = t719 - t967
    t971 = t969 + t970
    t972 = t966 + t725
    t973 = t972 - t966
    t974 = t972 - t973
    t975 = t966 - t974
    t976 = t725 - t973
    t977 = t975 + t976
    t978 = t972 + t731
    t979 = t978 - t972
    t980 = t978 - t979
    t981 = t972 - t980
    t982 = t731 - t979
    t983 = t981 + t982
    t984 = t978 + t737
    t985 = t984 - t978
    t986 = t984 - t985
    t987 = t978 - t986
    t988 = t737 - t985
    t989 = t987 + t988
    t990 = t984 + t743
    t991 = t990 - t984
    t992 = t990 - t991
    t993 = t984 - t992
    t994 = t743 - t991
    t995 = t993 + t994
    t996 = t990 + t749
    t997 = t996 - t990
    t998 = t996 - t997
    t999 = t990 - t998
    t1000 = t749 - t997
    t1001 = t999 + t1000
    t1002 = t996 + t755
    t1003 = t1002 - t996
    t1004 = t1002 - t1003
    t1005 = t996 - t1004
    t1006 = t755 - t1003
    t1007 = t1005 + t1006
    t1008 = t1002 + t761
    t1009 = t1008 - t1002
    t1010 = t1008 - t1009
    t1011 = t1002 - t1010
    t1012 = t761 - t1009
    t1013 = t1011 + t1012
    t1014 = t1008 + t767
    t1015 = t1014 - t1008
    t1016 = t1014 - t1015
    t1017 = t1008 - t1016
    t1018 = t767 - t1015
    t1019 = t1017 + t1018
    t1020 = t1014 + t773
    t1021 = t1020 - t1014
    t1022 = t1020 - t1021
    t1023 = t1014 - t1022
    t1024 = t773 - t1021
    t1025 = t1023 + t1024
    t1026 = t1020 + t779
    t1027 = t1026 - t1020
    t1028 = t1026 - t1027
    t1029 = t1020 - t1028
    t1030 = t779 - t1027
    t1031 = t1029 + t1030
    t1032 = t1026 + t785
    t1033 = t1032 - t1026
    t1034 = t1032 - t1033
    t1035 = t1026 - t1034
    t1036 = t785 - t1033
    t1037 = t1035 + t1036
    t1038 = t1032 + t791
    t1039 = t1038 - t1032
    t1040 = t1038 - t1039
    t1041 = t1032 - t1040
    t1042 = t791 - t1039
    t1043 = t1041 + t1042
    t1044 = t1038 + t797
    t1045 = t1044 - t1038
    t1046 = t1044 - t1045
    t1047 = t1038 - t1046
    t1048 = t797 - t1045
    t1049 = t1047 + t1048
    t1050 = t1044 + t803
    t1051 = t1050 - t1044
    t1052 = t1050 - t1051
    t1053 = t1044 - t1052
    t1054 = t803 - t1051
    t1055 = t1053 + t1054
    t1056 = t1050 + t809
    t1057 = t1056 - t1050
    t1058 = t1056 - t1057
    t1059 = t1050 - t1058
    t1060 = t809 - t1057
    t1061 = t1059 + t1060
    t1062 = t1056 + t815
    t1063 = t1062 - t1056
    t1064 = t1062 - t1063
    t1065 = t1056 - t1064
    t1066 = t815 - t1063
    t1067 = t1065 + t1066
    t1068 = t262 + t271
    t1069 = t1068 - t262
    t1070 = t1068 - t1069
    t1071 = t262 - t1070
    t1072 = t271 - t1069
    t1073 = t1071 + t1072
    t1074 = t1068 + t280
    t1075 = t1074 - t1068
    t1076 = t1074 - t1075
    t1077 = t1068 - t1076
    t1078 = t280 - t1075
    t1079 = t1077 + t1078
    t1080 = t1074 + t289
    t1081 = t1080 - t1074
    t1082 = t1080 - t1081
    t1083 = t1074 - t1082
    t1084 = t289 - t1081
    t1085 = t1083 + t1084
    t1086 = t1080 + t298
    t1087 = t1086 - t1080
    t1088 = t1086 - t1087
    t1089 = t1080 - t1088
    t1090 = t298 - t1087
    t1091 = t1089 + t1090
    t1092 = t1086 + t307
    t1093 = t1092 - t1086
    t1094 = t1092 - t1093
    t1095 = t1086 - t1094
    t1096 = t307 - t1093
    t1097 = t1095 + t1096
    t1098 = t1092 + t316
    t1099 = t1098 - t1092
    t1100 = t1098 - t1099
    t1101 = t1092 - t1100
    t1102 = t316 - t1099
    t1103 = t1101 + t1102
    t1104 = t1098 + t317
    t1105 = t1104 - t1098
    t1106 = t1104 - t1105
    t1107 = t1098 - t1106
    t1108 = t317 - t1105
    t1109 = t1107 + t1108
    t1110 = t1104 + t326
    t1111 = t1110 - t1104
    t1112 = t1110 - t1111
    t1113 = t1104 - t1112
    t1114 = t326 - t1111
    t1115 = t1113 + t1114
    t1116 = t1110 + t335
    t1117 = t1116 - t1110
    t1118 = t1116 - t1117
    t1119 = t1110 - t1118
    t1120 = t335 - t1117
    t1121 = t1119 + t1120
    t1122 = t1116 + t344
    t1123 = t1122 - t1116
    t1124 = t1122 - t1123
    t1125 = t1116 - t1124
    t1126 = t344 - t1123
    t1127 = t1125 + t1126
    t1128 = t1122 + t353
    t1129 = t1128 - t1122
    t1130 = t1128 - t1129
    t1131 = t1122 - t1130
    t1132 = t353 - t1129
    t1133 = t1131 + t1132
    t1134 = t1128 + t362
    t1135 = t1134 - t1128
    t1136 = t1134 - t1135
    t1137 = t1128 - t1136
    t1138 = t362 - t1135
    t1139 = t1137 + t1138
    t1140 = t1134 + t371
    t1141 = t1140 - t1134
    t1142 = t1140 - t1141
    t1143 = t1134 - t1142
    t1144 = t371 - t1141
    t1145 = t1143 + t1144
    t1146 = t1140 + t380
    t1147 = t1146 - t1140
    t1148 = t1146 - t1147
    t1149 = t1140 - t1148
    t1150 = t380 - t1147
    t1151 = t1149 + t1150
    t1152 = t1146 + t821
    t1153 = t1152 - t1146
    t1154 = t1152 - t1153
    t1155 = t1146 - t1154
    t1156 = t821 - t1153
    t1157 = t1155 + t1156
    t1158 = t1152 + t827
    t1159 = t1158 - t1152
    t1160 = t1158 - t1159
    t1161 = t1152 - t1160
    t1162 = t827 - t1159
    t1163 = t1161 + t1162
    t1164 = t1158 + t833
    t1165 = t1164 - t1158
    t1166 = t1164 - t1165
    t1167 = t1158 - t1166
    t1168 = t833 - t1165
    t1169 = t1167 + t1168
    t1170 = t1164 + t839
    t1171 = t1170 - t1164
    t1172 = t1170 - t1171
    t1173 = t1164 - t1172
    t1174 = t839 - t1171
    t1175 = t1173 + t1174
    t1176 = t1170 + t845
    t1177 = t1176 - t1170
    t1178 = t1176 - t1177
    t1179 = t1170 - t1178
    t1180 = t845 - t1177
    t1181 = t1179 + t1180
    t1182 = t1176 + t851
    t1183 = t1182 - t1176
    t1184 = t1182 - t1183
    t1185 = t1176 - t1184
    t1186 = t851 - t1183
    t1187 = t1185 + t1186
    t1188 = t1182 + t857
    t1189 = t1188 - t1182
    t1190 = t1188 - t1189
    t1191 = t1182 - t1190
    t1192 = t857 - t1189
    t1193 = t1191 + t1192
    t1194 = t1188 + t863
    t1195 = t1194 - t1188
    t1196 = t1194 - t1195
    t1197 = t1188 - t1196
    t1198 = t863 - t1195
    t1199 = t1197 + t1198
    t1200 = t1194 + t869
    t1201 = t1200 - t1194
    t1202 = t1200 - t1201
    t1203 = t1194 - t1202
    t1204 = t869 - t1201
    t1205 = t1203 + t1204
    t1206 = t1200 + t875
    t1207 = t1206 - t1200
    t1208 = t1206 - t1207
    t1209 = t1200 - t1208
    t1210 = t875 - t1207
    t1211 = t1209 + t1210
    t1212 = t1206 + t881
    t1213 = t1212 - t1206
    t1214 = t1212 - t1213
    t1215 = t1206 - t1214
    t1216 = t881 - t1213
    t1217 = t1215 + t1216
    t1218 = t1212 + t887
    t1219 = t1218 - t1212
    t1220 = t1218 - t1219
    t1221 = t1212 - t1220
    t1222 = t887 - t1219
    t1223 = t1221 + t1222
    t1224 = t1218 + t893
    t1225 = t1224 - t1218
    t1226 = t1224 - t1225
    t1227 = t1218 - t1226
    t1228 = t893 - t1225
    t1229 = t1227 + t1228
    t1230 = t1224 + t899
    t1231 = t1230 - t1224
    t1232 = t1230 - t1231
    t1233 = t1224 - t1232
    t1234 = t899 - t1231
    t1235 = t1233 + t1234
    t1236 = t1230 + t905
    t1237 = t1236 - t1230
    t1238 = t1236 - t1237
    t1239 = t1230 - t1238
    t1240 = t905 - t1237
    t1241 = t1239 + t1240
    t1242 = t1236 + t911
    t1243 = t1242 - t1236
    t1244 = t1242 - t1243
    t1245 = t1236 - t1244
    t1246 = t911 - t1243
    t1247 = t1245 + t1246
    t1248 = t1242 + t917
    t1249 = t1248 - t1242
    t1250 = t1248 - t1249
    t1251 = t1242 - t1250
    t1252 = t917 - t1249
    t1253 = t1251 + t1252
    t1254 = t1248 + t923
    t1255 = t1254 - t1248
    t1256 = t1254 - t1255
    t1257 = t1248 - t1256
    t1258 = t923 - t1255
    t1259 = t1257 + t1258
    t1260 = t1254 + t929
    t1261 = t1260 - t1254
    t1262 = t1260 - t1261
    t1263 = t1254 - t1262
    t1264 = t929 - t1261
    t1265 = t1263 + t1264
    t1266 = t1260 + t935
    t1267 = t1266 - t1260
    t1268 = t1266 - t1267
    t1269 = t1260 - t1268
    t1270 = t935 - t1267
    t1271 = t1269 + t1270
    t1272 = t1266 + t941
    t1273 = t1272 - t1266
    t1274 = t1272 - t1273
    t1275 = t1266 - t1274
    t1276 = t941 - t1273
    t1277 = t1275 + t1276
    t1278 = t1272 + t947
    t1279 = t1278 - t1272
    t1280 = t1278 - t1279
    t1281 = t1272 - t1280
    t1282 = t947 - t1279
    t1283 = t1281 + t1282
    t1284 = t1278 + t953
    t1285 = t1284 - t1278
    t1286 = t1284 - t1285
    t1287 = t1278 - t1286
    t1288 = t953 - t1285
    t1289 = t1287 + t1288
    t1290 = t1284 + t959
    t1291 = t1290 - t1284
    t1292 = t1290 - t1291
    t1293 = t1284 - t1292
    t1294 = t959 - t1291
    t1295 = t1293 + t1294
    t1296 = t1290 + t965
    t1297 = t1296 - t1290
    t1298 = t1296 - t1297
    t1299 = t1290 - t1298
    t1300 = t965 - t1297
    t1301 = t1299 + t1300
    t1302 = t1296 + t971
    t1303 = t1302 - t1296
    t1304 = t1302 - t1303
    t1305 = t1296 - t1304
    t1306 = t971 - t1303
    t1307 = t1305 + t1306
    t1308 = t1302 + t977
    t1309 = t1308 - t1302
    t1310 = t1308 - t1309
    t1311 = t1302 - t1310
    t1312 = t977 - t1309
    t1313 = t1311 + t1312
    t1314 = t1308 + t983
    t1315 = t1314 - t1308
    t1316 = t1314 - t1315
    t1317 = t1308 - t1316
    t1318 = t983 - t1315
    t1319 = t1317 + t1318
    t1320 = t1314 + t989
    t1321 = t1320 - t1314
    t1322 = t1320 - t1321
    t1323 = t1314 - t1322
    t1324 = t989 - t1321
    t1325 = t1323 + t1324
    t1326 = t1320 + t995
    t1327 = t1326 - t1320
    t1328 = t1326 - t1327
    t1329 = t1320 - t1328
    t1330 = t995 - t1327
    t1331 = t1329 + t1330
    t1332 = t1326 + t1001
    t1333 = t1332 - t1326
    t1334 = t1332 - t1333
    t1335 = t1326 - t1334
    t1336 = t1001 - t1333
    t1337 = t1335 + t1336
    t1338 = t1332 + t1007
    t1339 = t1338 - t1332
    t1340 = t1338 - t1339
    t1341 = t1332 - t1340
    t1342 = t1007 - t1339
    t1343 = t1341 + t1342
    t1344 = t1338 + t1013
    t1345 = t1344 - t1338
    t1346 = t1344 - t1345
    t1347 = t1338 - t1346
    t1348 = t1013 - t1345
    t1349 = t1347 + t1348
    t1350 = t1344 + t1019
    t1351 = t1350 - t1344
    t1352 = t1350 - t1351
    t1353 = t1344 - t1352
    t1354 = t1019 - t1351
    t1355 = t1353 + t1354
    t1356 = t1350 + t1025
    t1357 = t1356 - t1350
    t1358 = t1356 - t1357
    t1359 = t1350 - t1358
    t1360 = t1025 - t1357
    t1361 = t1359 + t1360
    t1362 = t1356 + t1031
    t1363 = t1362 - t1356
    t1364 = t1362 - t1363
    t1365 = t1356 - t1364
    t1366 = t1031 - t1363
    t1367 = t1365 + t1366
    t1368 = t1362 + t1037
    t1369 = t1368 - t1362
    t1370 = t1368 - t1369
    t1371 = t1362 - t1370
    t1372 = t1037 - t1369
    t1373 = t1371 + t1372
    t1374 = t1368 + t1043
    t1375 = t1374 - t1368
    t1376 = t1374 - t1375
    t1377 = t1368 - t1376
    t1378 = t1043 - t1375
    t1379 = t1377 + t1378
    t1380 = t1374 + t1049
    t1381 = t1380 - t1374
    t1382 = t1380 - t1381
    t1383 = t1374 - t1382
    t1384 = t1049 - t1381
    t1385 = t1383 + t1384
    t1386 = t1380 + t1055
    t1387 = t1386 - t1380
    t1388 = t1386 - t1387
    t1389 = t1380 - t1388
    t1390 = t1055 - t1387
    t1391 = t1389 + t1390
    t1392 = t1386 + t1061
    t1393 = t1392 - t1386
    t1394 = t1392 - t1393
    t1395 = t1386 - t1394
    t1396 = t1061 - t1393
    t1397 = t1395 + t1396
    t1398 = t1392 + t1067
    t1399 = t1398 - t1392
    t1400 = t1398 - t1399
    t1401 = t1392 - t1400
    t1402 = t1067 - t1399
    t1403 = t1401 + t1402
    t1404 = t325 + t334
    t1405 = t1404 + t343
    t1406 = t1405 + t352
    t1407 = t1406 + t361
    t1408 = t1407 + t370
    t1409 = t1408 + t379
    t1410 = t1409 + t388
    t1411 = t1410 + t389
    t1412 = t1411 + t390
    t1413 = t1412 + t391
    t1414 = t1413 + t392
    t1415 = t1414 + t393
    t1416 = t1415 + t394
    t1417 = t1416 + t395
    t1418 = t1417 + t1073
    t1419 = t1418 + t1079
    t1420 = t1419 + t1085
    t1421 = t1420 + t1091
    t1422 = t1421 + t1097
    t1423 = t1422 + t1103
    t1424 = t1423 + t1109
    t1425 = t1424 + t1115
    t1426 = t1425 + t1121
    t1427 = t1426 + t1127
    t1428 = t1427 + t1133
    t1429 = t1428 + t1139
    t1430 = t1429 + t1145
    t1431 = t1430 + t1151
    t1432 = t1431 + t1157
    t1433 = t1432 + t1163
    t1434 = t1433 + t1169
    t1435 = t1434 + t1175
    t1436 = t1435 + t1181
    t1437 = t1436 + t1187
    t1438 = t1437 + t1193
    t1439 = t1438 + t1199
    t1440 = t1439 + t1205
    t1441 = t1440 + t1211
    t1442 = t1441 + t1217
    t1443 = t1442 + t1223
    t1444 = t1443 + t1229
    t1445 = t1444 + t1235
    t1446 = t1445 + t1241
    t1447 = t1446 + t1247
    t1448 = t1447 + t1253
    t1449 = t1448 + t1259
    t1450 = t1449 + t1265
    t1451 = t1450 + t1271
    t1452 = t1451 + t1277
    t1453 = t1452 + t1283
    t1454 = t1453 + t1289
    t1455 = t1454 + t1295
    t1456 = t1455 + t1301
    t1457 = t1456 + t1307
    t1458 = t1457 + t1313
    t1459 = t1458 + t1319
    t1460 = t1459 + t1325
    t1461 = t1460 + t1331
    t1462 = t1461 + t1337
    t1463 = t1462 + t1343
    t1464 = t1463 + t1349
    t1465 = t1464 + t1355
    t1466 = t1465 + t1361
    t1467 = t1466 + t1367
    t1468 = t1467 + t1373
    t1469 = t1468 + t1379
    t1470 = t1469 + t1385
    t1471 = t1470 + t1391
    t1472 = t1471 + t1397
    t1473 = t1472 + t1403
    t1474 = t1398 + t1473
    t1475 = t1474 - t1398
    t1476 = t1474 - t1475
    t1477 = t1398 - t1476
    t1478 = t1473 - t1475
    t1479 = t1477 + t1478
    t1480 = t1062 + t1474
    t1481 = t1480 - t1062
    t1482 = t1480 - t1481
    t1483 = t1062 - t1482
    t1484 = t1474 - t1481
    t1485 = t1483 + t1484
    t1486 = t810 + t1480
    t1487 = t1486 - t810
    t1488 = t1486 - t1487
    t1489 = t810 - t1488
    t1490 = t1480 - t1487
    t1491 = t1489 + t1490
    t1492 = t630 + t1486
    t1493 = t1492 - t630
    t1494 = t1492 - t1493
    t1495 = t630 - t1494
    t1496 = t1486 - t1493
    t1497 = t1495 + t1496
    t1498 = t510 + t1492
    t1499 = t1498 - t510
    t1500 = t1498 - t1499
    t1501 = t510 - t1500
    t1502 = t1492 - t1499
    t1503 = t1501 + t1502
    t1504 = t438 + t1498
    t1505 = t1504 - t438
    t1506 = t1504 - t1505
    t1507 = t438 - t1506
    t1508 = t1498 - t1505
    t1509 = t1507 + t1508
    t1510 = t402 + t1504
    t1511 = t1510 - t402
    t1512 = t1510 - t1511
    t1513 = t402 - t1512
    t1514 = t1504 - t1511
    t1515 = t1513 + t1514
    t1516 = t65 + t1510
    t1517 = t1516 - t65
    t1518 = t1516 - t1517
    t1519 = t65 - t1518
    t1520 = t1510 - t1517
    t1521 = t1519 + t1520
    t1522 = 0.0
    t1523 = 0.0
    t1524 = 0.0
    t1525 = 0.0
    t1526 = 0.0
    t1527 = 0.0
    t1528 = 0.0
    t1529 = 0.0
    t1530 = 0
    t1531 = t1516
    t1532 = t1531 + t1521
    t1533 = t1532 - t1531
    t1534 = t1532 - t1533
    t1535 = t1531 - t1534
    t1536 = t1521 - t1533
    t1537 = t1535 + t1536
    if t1537 != 0.0:
        if t1530 == 0:
            t1522 = t1532
        elif t1530 == 1:
            t1523 = t1532
        elif t1530 == 2:
            t1524 = t1532
        elif t1530 == 3:
            t1525 = t1532
        elif t1530 == 4:
            t1526 = t1532
        elif t1530 == 5:
            t1527 = t1532
        elif t1530 == 6:
            t1528 = t1532
        elif t1530 == 7:
            t1529 = t1532
        t1530 += 1
        t1531 = t1537
    else:
        t1531 = t1532
    t1538 = t1531 + t1515
    t1539 = t1538 - t1531
    t1540 = t1538 - t1539
    t1541 = t1531 - t1540
    t1542 = t1515 - t1539
    t1543 = t1541 + t1542
    if t1543 != 0.0:
        if t1530 == 0:
            t1522 = t1538
        elif t1530 == 1:
            t1523 = t1538
        elif t1530 == 2:
            t1524 = t1538
        elif t1530 == 3:
            t1525 = t1538
        elif t1530 == 4:
            t1526 = t1538
        elif t1530 == 5:
            t1527 = t1538
        elif t1530 == 6:
            t1528 = t1538
        elif t1530 == 7:
            t1529 = t1538
        t1530 += 1
        t1531 = t1543
    else:
        t1531 = t1538
    t1544 = t1531 + t1509
    t1545 = t1544 - t1531
    t1546 = t1544 - t1545
    t1547 = t1531 - t1546
    t1548 = t1509 - t1545
    t1549 = t1547 + t1548
    if t1549 != 0.0:
        if t1530 == 0:
            t1522 = t1544
        elif t1530 == 1:
            t1523 = t1544
        elif t1530 == 2:
            t1524 = t1544
        elif t1530 == 3:
            t1525 = t1544
        elif t1530 == 4:
            t1526 = t1544
        elif t1530 == 5:
            t1527 = t1544
        elif t1530 == 6:
            t1528 = t1544
        elif t1530 == 7:
            t1529 = t1544
        t1530 += 1
        t1531 = t1549
    else:
        t1531 = t1544
    t1550 = t1531 + t1503
    t1551 = t1550 - t1531
    t1552 = t1550 - t1551
    t1553 = t1531 - t1552
    t1554 = t1503 - t1551
    t1555 = t1553 + t1554
    if t1555 != 0.0:
        if t1530 == 0:
            t1522 = t1550
        elif t1530 == 1:
            t1523 = t1550
        elif t1530 == 2:
            t1524 = t1550
        elif t1530 == 3:
            t1525 = t1550
        elif t1530 == 4:
            t1526 = t1550
        elif t1530 == 5:
            t1527 = t1550
        elif t1530 == 6:
            t1528 = t1550
        elif t1530 == 7:
            t1529 = t1550
        t1530 += 1
        t1531 = t1555
    else:
        t1531 = t1550
    t1556 = t1531 + t1497
    t1557 = t1556 - t1531
    t1558 = t1556 - t1557
    t1559 = t1531 - t1558
    t1560 = t1497 - t1557
    t1561 = t1559 + t1560
    if t1561 != 0.0:
        if t1530 == 0:
            t1522 = t1556
        elif t1530 == 1:
            t1523 = t1556
        elif t1530 == 2:
            t1524 = t1556
        elif t1530 == 3:
            t1525 = t1556
        elif t1530 == 4:
            t1526 = t1556
        elif t1530 == 5:
            t1527 = t1556
        elif t1530 == 6:
            t1528 = t1556
        elif t1530 == 7:
            t1529 = t1556
        t1530 += 1
        t1531 = t1561
    else:
        t1531 = t1556
    t1562 = t1531 + t1491
    t1563 = t1562 - t1531
    t1564 = t1562 - t1563
    t1565 = t1531 - t1564
    t1566 = t1491 - t1563
    t1567 = t1565 + t1566
    if t1567 != 0.0:
        if t1530 == 0:
            t1522 = t1562
        elif t1530 == 1:
            t1523 = t1562
        elif t1530 == 2:
            t1524 = t1562
        elif t1530 == 3:
            t1525 = t1562
        elif t1530 == 4:
            t1526 = t1562
        elif t1530 == 5:
            t1527 = t1562
        elif t1530 == 6:
            t1528 = t1562
        elif t1530 == 7:
            t1529 = t1562
        t1530 += 1
        t1531 = t1567
    else:
        t1531 = t1562
    t1568 = t1531 + t1485
    t1569 = t1568 - t1531
    t1570 = t1568 - t1569
    t1571 = t1531 - t1570
    t1572 = t1485 - t1569
    t1573 = t1571 + t1572
    if t1573 != 0.0:
        if t1530 == 0:
            t1522 = t1568
        elif t1530 == 1:
            t1523 = t1568
        elif t1530 == 2:
            t1524 = t1568
        elif t1530 == 3:
            t1525 = t1568
        elif t1530 == 4:
            t1526 = t1568
        elif t1530 == 5:
            t1527 = t1568
        elif t1530 == 6:
            t1528 = t1568
        elif t1530 == 7:
            t1529 = t1568
        t1530 += 1
        t1531 = t1573
    else:
        t1531 = t1568
    t1574 = t1531 + t1479
    t1575 = t1574 - t1531
    t1576 = t1574 - t1575
    t1577 = t1531 - t1576
    t1578 = t1479 - t1575
    t1579 = t1577 + t1578
    if t1579 != 0.0:
        if t1530 == 0:
            t1522 = t1574
        elif t1530 == 1:
            t1523 = t1574
        elif t1530 == 2:
            t1524 = t1574
        elif t1530 == 3:
            t1525 = t1574
        elif t1530 == 4:
            t1526 = t1574
        elif t1530 == 5:
            t1527 = t1574
        elif t1530 == 6:
            t1528 = t1574
        elif t1530 == 7:
            t1529 = t1574
        t1530 += 1
        t1531 = t1579
    else:
        t1531 = t1574
    if t1530 == 0:
        t1522 = t1531
    elif t1530 == 1:
        t1523 = t1531
    elif t1530 == 2:
        t1524 = t1531
    elif t1530 == 3:
        t1525 = t1531
    elif t1530 == 4:
        t1526 = t1531
    elif t1530 == 5:
        t1527 = t1531
    elif t1530 == 6:
        t1528 = t1531
    elif t1530 == 7:
        t1529 = t1531
    t1580 = t1522 + t1523
    t1581 = t1580 - t1522
    t1582 = t1523 - t1581
    t1583 = t1582 + t1524
    t1584 = t1583 - t1582
    t1585 = t1524 - t1584
    t1586 = t1585 + t1525
    t1587 = t1586 - t1585
    t1588 = t1525 - t1587
    t1589 = t1588 + t1526
    t1590 = t1589 - t1588
    t1591 = t1526 - t1590
    t1592 = t1591 + t1527
    t1593 = t1592 - t1591
    t1594 = t1527 - t1593
    t1595 = t1594 + t1528
    t1596 = t1595 - t1594
    t1597 = t1528 - t1596
    t1598 = t1597 + t1529
    t1599 = t1598 - t1597
    t1600 = t1529 - t1599
    return (t1580, t1583, t1586, t1589, t1592, t1595, t1598, t1600,)
